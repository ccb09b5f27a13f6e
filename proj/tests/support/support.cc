// tests/support/support.cc

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

#include "support.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "augeval/fft.h"
#include "augeval/wav_io.h"

namespace augeval {
namespace test {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::atomic<std::uint64_t> g_tempdir_counter{0};

}  // namespace

TempDir::TempDir() {
  const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  const std::uint64_t n = g_tempdir_counter.fetch_add(1);
  path_ = std::filesystem::temp_directory_path() /
          ("augeval_test_" + std::to_string(stamp) + "_" + std::to_string(n));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

AudioClip make_tone(double freq_hz, double duration_s, int sample_rate) {
  AudioClip clip;
  clip.sample_rate = sample_rate;
  const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate));
  clip.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    clip.samples[i] = static_cast<float>(
        0.5 * std::sin(2.0 * kPi * freq_hz * static_cast<double>(i) / sample_rate));
  }
  return clip;
}

double dominant_frequency(const AudioClip& clip) {
  const std::size_t len = clip.samples.size();
  const std::size_t begin = len / 4;
  const std::size_t span = len / 2;
  if (span < 16) throw std::invalid_argument("dominant_frequency: clip too short");

  std::size_t n = 1;
  while (n < span * 8) n <<= 1;  // zero-pad for fine bin spacing

  std::vector<std::complex<double>> buf(n, {0.0, 0.0});
  for (std::size_t i = 0; i < span; ++i) {
    const double w =
        0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) / static_cast<double>(span));
    buf[i] = std::complex<double>(static_cast<double>(clip.samples[begin + i]) * w, 0.0);
  }
  fft(&buf);

  std::size_t peak = 1;
  double peak_mag = 0.0;
  for (std::size_t k = 1; k < n / 2; ++k) {
    const double mag = std::abs(buf[k]);
    if (mag > peak_mag) {
      peak_mag = mag;
      peak = k;
    }
  }

  double shift = 0.0;
  if (peak > 0 && peak + 1 < n / 2) {
    const double a = std::abs(buf[peak - 1]);
    const double b = std::abs(buf[peak]);
    const double c = std::abs(buf[peak + 1]);
    const double denom = a - 2.0 * b + c;
    if (denom != 0.0) shift = 0.5 * (a - c) / denom;
  }
  return (static_cast<double>(peak) + shift) * clip.sample_rate / static_cast<double>(n);
}

namespace {

int oracle_rec(const std::vector<std::string>& ref, const std::vector<std::string>& hyp,
               std::size_t i, std::size_t j, std::map<std::pair<std::size_t, std::size_t>, int>& memo) {
  if (i == ref.size()) return static_cast<int>(hyp.size() - j);
  if (j == hyp.size()) return static_cast<int>(ref.size() - i);
  const auto key = std::make_pair(i, j);
  const auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  const int sub = oracle_rec(ref, hyp, i + 1, j + 1, memo) + (ref[i] == hyp[j] ? 0 : 1);
  const int del = oracle_rec(ref, hyp, i + 1, j, memo) + 1;
  const int ins = oracle_rec(ref, hyp, i, j + 1, memo) + 1;
  const int best = std::min(sub, std::min(del, ins));
  memo.emplace(key, best);
  return best;
}

}  // namespace

int edit_distance_oracle(const std::vector<std::string>& ref,
                         const std::vector<std::string>& hyp) {
  std::map<std::pair<std::size_t, std::size_t>, int> memo;
  return oracle_rec(ref, hyp, 0, 0, memo);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool files_identical(const std::filesystem::path& a, const std::filesystem::path& b) {
  return read_file(a) == read_file(b);
}

std::vector<ManifestEntry> make_corpus(const CorpusOptions& options) {
  if (options.prompt_ids.empty()) {
    throw std::invalid_argument("make_corpus: no prompt ids");
  }
  std::vector<std::string> speakers;
  std::vector<Cohort> cohorts;
  for (int i = 1; i <= options.n_patients; ++i) {
    std::ostringstream id;
    id << "P" << (i < 10 ? "0" : "") << i;
    speakers.push_back(id.str());
    cohorts.push_back(Cohort::patient);
  }
  for (int i = 1; i <= options.n_controls; ++i) {
    std::ostringstream id;
    id << "C" << (i < 10 ? "0" : "") << i;
    speakers.push_back(id.str());
    cohorts.push_back(Cohort::control);
  }

  std::vector<ManifestEntry> manifest;
  manifest.reserve(speakers.size() * options.prompt_ids.size());
  double tone_hz = 200.0;
  for (std::size_t s = 0; s < speakers.size(); ++s) {
    for (const std::string& prompt_id : options.prompt_ids) {
      ManifestEntry entry;
      entry.utterance_id = speakers[s] + "_" + prompt_id;
      entry.speaker_id = speakers[s];
      entry.cohort = cohorts[s];
      entry.prompt_id = prompt_id;
      entry.prompt_source = parse_prompt_source(prompt_id.substr(0, prompt_id.find('-')));
      entry.reference_text = "tekst voor " + prompt_id;
      entry.duration_s = options.duration_s;
      entry.provenance = Provenance::original;
      if (options.write_audio) {
        std::filesystem::create_directories(options.audio_dir);
        const std::filesystem::path wav =
            options.audio_dir / (entry.utterance_id + ".wav");
        // Every speaker hums a slightly different pitch so converted or
        // warped outputs differ per speaker.
        write_wav(wav, make_tone(tone_hz + 25.0 * static_cast<double>(s),
                                 options.duration_s, options.sample_rate));
        entry.audio_path = std::filesystem::absolute(wav).string();
      } else {
        entry.audio_path =
            (std::filesystem::path("/nonexistent") / (entry.utterance_id + ".wav")).string();
      }
      manifest.push_back(std::move(entry));
    }
  }
  return manifest;
}

std::vector<std::string> default_prompt_ids() {
  std::vector<std::string> ids;
  auto block = [&ids](const std::string& tag, int n) {
    for (int i = 1; i <= n; ++i) ids.push_back(tag + "-" + std::to_string(i));
  };
  block("LIT1", 8);
  block("LIT2", 14);
  block("LIT3", 8);
  block("LIT4", 10);
  block("LIT5", 6);
  block("LIT6", 80);
  block("NEWS", 76);
  return ids;
}

MockChatServer::MockChatServer(Handler handler) {
  server_.Post("/v1/chat/completions",
               [handler = std::move(handler)](const httplib::Request& req,
                                              httplib::Response& res) { handler(req, res); });
  port_ = server_.bind_to_any_port("127.0.0.1");
  if (port_ <= 0) throw std::runtime_error("mock server: cannot bind");
  thread_ = std::thread([this]() { server_.listen_after_bind(); });
  server_.wait_until_ready();
}

MockChatServer::~MockChatServer() {
  server_.stop();
  if (thread_.joinable()) thread_.join();
}

std::string MockChatServer::url(const std::string& path) const {
  return "http://127.0.0.1:" + std::to_string(port_) + path;
}

std::string chat_response(const std::string& content) {
  nlohmann::ordered_json doc;
  doc["choices"] = nlohmann::ordered_json::array(
      {{{"message", {{"role", "assistant"}, {"content", content}}}}});
  return doc.dump();
}

}  // namespace test
}  // namespace augeval
