// tests/unit/corpus_test.cc

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

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "augeval/audio.h"
#include "augeval/manifest.h"
#include "augeval/wav_io.h"
#include "support.h"

using namespace augeval;
using test::TempDir;

TEST_CASE("enum names round-trip") {
  for (Cohort c : {Cohort::patient, Cohort::control, Cohort::synthetic}) {
    CHECK(parse_cohort(to_string(c)) == c);
  }
  for (PromptSource s : {PromptSource::LIT1, PromptSource::LIT2, PromptSource::LIT3,
                         PromptSource::LIT4, PromptSource::LIT5, PromptSource::LIT6,
                         PromptSource::NEWS, PromptSource::EXTERNAL}) {
    CHECK(parse_prompt_source(to_string(s)) == s);
  }
  for (Provenance p : {Provenance::original, Provenance::time_stretch,
                       Provenance::speed_perturb, Provenance::vtlp, Provenance::knnvc,
                       Provenance::tts}) {
    CHECK(parse_provenance(to_string(p)) == p);
  }
  CHECK_THROWS_AS(parse_cohort("martian"), std::invalid_argument);
  CHECK_THROWS_AS(parse_prompt_source(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_provenance("speedperturb"), std::invalid_argument);
}

TEST_CASE("manifest save/load round-trips and resolves relative audio paths") {
  TempDir tmp;
  test::CorpusOptions opt;
  opt.prompt_ids = {"LIT1-1", "NEWS-3"};
  std::vector<ManifestEntry> corpus = make_corpus(opt);
  // Point the audio inside the manifest directory so save() relativizes it.
  for (ManifestEntry& e : corpus) {
    e.audio_path = (tmp.path() / "audio" / (e.utterance_id + ".wav")).string();
  }

  const auto path = tmp.path() / "manifest.jsonl";
  save_manifest(corpus, path);
  const std::vector<ManifestEntry> loaded = load_manifest(path);

  REQUIRE(loaded.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(loaded[i].utterance_id == corpus[i].utterance_id);
    CHECK(loaded[i].speaker_id == corpus[i].speaker_id);
    CHECK(loaded[i].cohort == corpus[i].cohort);
    CHECK(loaded[i].prompt_id == corpus[i].prompt_id);
    CHECK(loaded[i].prompt_source == corpus[i].prompt_source);
    CHECK(loaded[i].reference_text == corpus[i].reference_text);
    CHECK(loaded[i].audio_path == corpus[i].audio_path);  // re-absolutized
    CHECK(loaded[i].duration_s == doctest::Approx(corpus[i].duration_s));
    CHECK(loaded[i].provenance == corpus[i].provenance);
  }

  // On disk the audio paths must be relative, so a saved corpus tree can be
  // moved or diffed across runs.
  const std::string raw = test::read_file(path);
  CHECK(raw.find("\"audio/") != std::string::npos);
  CHECK(raw.find(tmp.path().string()) == std::string::npos);

  // Saving the loaded manifest again reproduces the bytes.
  const auto path2 = tmp.path() / "manifest2.jsonl";
  save_manifest(loaded, path2);
  CHECK(test::files_identical(path, path2));
}

TEST_CASE("manifest load rejects malformed lines with their line number") {
  TempDir tmp;
  const auto path = tmp.path() / "bad.jsonl";
  std::ofstream(path) << R"({"utterance_id":"a","speaker_id":"S","cohort":"patient",)"
                      << R"("prompt_id":"LIT1-1","prompt_source":"LIT1",)"
                      << R"("reference_text":"x","audio_path":"a.wav",)"
                      << R"("duration_s":1.0,"provenance":"original"})"
                      << "\n{nonsense\n";
  CHECK_THROWS_WITH_AS(load_manifest(path), doctest::Contains(":2:"),
                       std::runtime_error);
}

TEST_CASE("manifest validation invariants") {
  test::CorpusOptions opt;
  opt.prompt_ids = {"LIT1-1"};
  std::vector<ManifestEntry> corpus = make_corpus(opt);
  CHECK_NOTHROW(validate_manifest(corpus));

  SUBCASE("duplicate utterance id") {
    corpus.push_back(corpus.front());
    CHECK_THROWS_AS(validate_manifest(corpus), std::runtime_error);
  }
  SUBCASE("synthetic cohort requires knnvc or tts provenance") {
    corpus.front().cohort = Cohort::synthetic;
    CHECK_THROWS_AS(validate_manifest(corpus), std::runtime_error);
  }
  SUBCASE("knnvc provenance requires synthetic cohort") {
    corpus.front().provenance = Provenance::knnvc;
    CHECK_THROWS_AS(validate_manifest(corpus), std::runtime_error);
  }
  SUBCASE("EXTERNAL prompts only on tts entries") {
    corpus.front().prompt_source = PromptSource::EXTERNAL;
    CHECK_THROWS_AS(validate_manifest(corpus), std::runtime_error);
  }
  SUBCASE("negative duration") {
    corpus.front().duration_s = -0.5;
    CHECK_THROWS_AS(validate_manifest(corpus), std::runtime_error);
  }
}

TEST_CASE("wav round-trip preserves 16-bit samples") {
  TempDir tmp;
  AudioClip clip = test::make_tone(440.0, 0.05, 16000);
  const auto path = tmp.path() / "tone.wav";
  write_wav(path, clip);
  const AudioClip back = read_wav(path);

  CHECK(back.sample_rate == clip.sample_rate);
  REQUIRE(back.samples.size() == clip.samples.size());
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    // One quantization step of 16-bit PCM.
    CHECK(std::abs(back.samples[i] - clip.samples[i]) <= 1.0f / 32767.0f);
  }

  // Writing the read-back clip again is byte-identical: quantization has
  // already happened, so the second pass is lossless.
  const auto path2 = tmp.path() / "tone2.wav";
  write_wav(path2, back);
  CHECK(test::files_identical(path, path2));
}

TEST_CASE("wav reader downmixes stereo by averaging") {
  TempDir tmp;
  const auto path = tmp.path() / "stereo.wav";
  // Hand-build a 2-channel file: left = 0.5, right = -0.5 -> mean 0.
  {
    const int sr = 8000;
    const std::int16_t left = 16384, right = -16384;
    const std::uint32_t n = 100;
    std::ofstream out(path, std::ios::binary);
    auto u16 = [&out](std::uint16_t v) { out.put(char(v & 0xff)).put(char(v >> 8)); };
    auto u32 = [&out](std::uint32_t v) {
      out.put(char(v & 0xff)).put(char((v >> 8) & 0xff));
      out.put(char((v >> 16) & 0xff)).put(char(v >> 24));
    };
    out.write("RIFF", 4);
    u32(36 + n * 4);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    u32(16);
    u16(1);       // PCM
    u16(2);       // channels
    u32(sr);
    u32(sr * 4);  // byte rate
    u16(4);       // block align
    u16(16);      // bits
    out.write("data", 4);
    u32(n * 4);
    for (std::uint32_t i = 0; i < n; ++i) {
      u16(static_cast<std::uint16_t>(left));
      u16(static_cast<std::uint16_t>(right));
    }
  }
  const AudioClip clip = read_wav(path);
  CHECK(clip.sample_rate == 8000);
  REQUIRE(clip.samples.size() == 100);
  for (float s : clip.samples) CHECK(std::abs(s) < 1e-4f);
}

TEST_CASE("wav reader rejects truncated and foreign files") {
  TempDir tmp;
  const auto garbage = tmp.path() / "garbage.wav";
  std::ofstream(garbage, std::ios::binary) << "not a riff file";
  CHECK_THROWS_AS(read_wav(garbage), std::runtime_error);

  const auto tone = tmp.path() / "tone.wav";
  write_wav(tone, test::make_tone(440.0, 0.05, 16000));
  const std::string bytes = test::read_file(tone);
  const auto cut = tmp.path() / "cut.wav";
  std::ofstream(cut, std::ios::binary) << bytes.substr(0, bytes.size() / 2);
  CHECK_THROWS_AS(read_wav(cut), std::runtime_error);

  CHECK_THROWS_AS(read_wav(tmp.path() / "missing.wav"), std::runtime_error);
}

TEST_CASE("audio validation and clamping") {
  AudioClip clip = test::make_tone(440.0, 0.01, 16000);
  CHECK_NOTHROW(validate_audio(clip));

  AudioClip bad_rate = clip;
  bad_rate.sample_rate = 0;
  CHECK_THROWS_AS(validate_audio(bad_rate), std::invalid_argument);

  AudioClip with_nan = clip;
  with_nan.samples[3] = std::nanf("");
  CHECK_THROWS_AS(validate_audio(with_nan), std::invalid_argument);

  AudioClip loud = clip;
  loud.samples[0] = 2.0f;
  loud.samples[1] = -3.0f;
  CHECK(clamp_to_unit(&loud) == 2);
  CHECK(loud.samples[0] == 1.0f);
  CHECK(loud.samples[1] == -1.0f);
  CHECK(clamp_to_unit(&loud) == 0);
}
