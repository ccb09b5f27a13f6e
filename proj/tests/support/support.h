// tests/support/support.h

// Copyright 2026 The Augeval Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUGEVAL_TESTS_SUPPORT_SUPPORT_H_
#define AUGEVAL_TESTS_SUPPORT_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"

#include "augeval/audio.h"
#include "augeval/manifest.h"

namespace augeval {
namespace test {

// Self-cleaning scratch directory under the system temp root.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Pure sine tone, amplitude 0.5.
AudioClip make_tone(double freq_hz, double duration_s, int sample_rate);

// Frequency of the strongest spectral peak, refined by quadratic
// interpolation over a zero-padded windowed FFT of the clip's middle half
// (the middle avoids analysis ramps at the edges).
double dominant_frequency(const AudioClip& clip);

// Reference edit distance by plain recursion over suffixes (memoized);
// structured nothing like the production scorer's tabulation + backtrace.
int edit_distance_oracle(const std::vector<std::string>& ref,
                         const std::vector<std::string>& hyp);

std::string read_file(const std::filesystem::path& path);
bool files_identical(const std::filesystem::path& a, const std::filesystem::path& b);

// Synthetic corpus shaped like the study data: patients P01.., controls
// C01.., every speaker reading every prompt.
struct CorpusOptions {
  int n_patients = 2;
  int n_controls = 2;
  std::vector<std::string> prompt_ids;  // e.g. "LIT1-1"; source parsed from prefix
  bool write_audio = false;             // emit a tone WAV per utterance
  std::filesystem::path audio_dir;      // required when write_audio
  int sample_rate = 16000;
  double duration_s = 0.25;
};

std::vector<ManifestEntry> make_corpus(const CorpusOptions& options);

// The 202 prompt ids of the shipped default split table, in file order.
std::vector<std::string> default_prompt_ids();

// In-process chat-completion endpoint for exercising the correction client.
class MockChatServer {
 public:
  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  explicit MockChatServer(Handler handler);
  ~MockChatServer();
  MockChatServer(const MockChatServer&) = delete;
  MockChatServer& operator=(const MockChatServer&) = delete;

  int port() const { return port_; }
  std::string url(const std::string& path = "/v1/chat/completions") const;

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

// Minimal well-formed chat-completion response carrying `content`.
std::string chat_response(const std::string& content);

}  // namespace test
}  // namespace augeval

#endif  // AUGEVAL_TESTS_SUPPORT_SUPPORT_H_
