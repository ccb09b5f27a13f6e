// tests/acceptance/acceptance_main.cc

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

// Release gate for the toolkit: twelve self-contained checks, one line of
// output each. Every check pins the numeric tolerances it relies on; a
// failing check names what diverged. Exit status is the number of failures
// capped at 1, so `ctest` treats any red line as a failed test.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "httplib.h"
#include "json.hpp"

#include "augeval/campaign.h"
#include "augeval/correction.h"
#include "augeval/dutch_numbers.h"
#include "augeval/features.h"
#include "augeval/knn.h"
#include "augeval/manifest.h"
#include "augeval/normalize.h"
#include "augeval/resample.h"
#include "augeval/rng.h"
#include "augeval/split.h"
#include "augeval/stft.h"
#include "augeval/stretch.h"
#include "augeval/vtlp.h"
#include "augeval/wav_io.h"
#include "augeval/wer.h"
#include "support.h"

namespace {

using namespace augeval;
namespace fs = std::filesystem;

// Collects one criterion's verdict. check() chains assertions; the first
// failure freezes the message so the report names the original divergence.
struct Verdict {
  bool ok = true;
  std::string detail;

  void check(bool condition, const std::string& message) {
    if (ok && !condition) {
      ok = false;
      detail = message;
    }
  }
};

std::string format_double(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

// --------------------------------------------------------------------------
// 1. The dynamic-programming word scorer agrees with a brute-force oracle.

Verdict check_edit_distance_oracle() {
  Verdict v;
  const std::vector<std::string> vocab = {"aa", "bb", "cc", "dd"};
  SplitMix rng(0xACCE97);
  for (int i = 0; i < 1000 && v.ok; ++i) {
    std::vector<std::string> ref(1 + rng.below(8));
    std::vector<std::string> hyp(rng.below(9));
    for (auto& w : ref) w = vocab[static_cast<std::size_t>(rng.below(4))];
    for (auto& w : hyp) w = vocab[static_cast<std::size_t>(rng.below(4))];

    const EditCounts counts = wer_counts(ref, hyp);
    const int expected = test::edit_distance_oracle(ref, hyp);
    v.check(counts.errors() == expected,
            "case " + std::to_string(i) + ": scorer " + std::to_string(counts.errors()) +
                " vs oracle " + std::to_string(expected));
  }
  return v;
}

// --------------------------------------------------------------------------
// 2. A digit-string reference scores 200% raw and 0% after normalization.

Verdict check_digit_normalization_fact() {
  Verdict v;
  ManifestEntry ref;
  ref.utterance_id = "u";
  ref.speaker_id = "s";
  ref.reference_text = "2025";
  const std::vector<Hypothesis> hyps = {{"u", "tweeduizend vijfentwintig"}};

  NormalizationConfig raw;
  raw.lowercase = raw.strip_punct = raw.collapse_whitespace = false;
  raw.numbers_to_words = raw.fold_e_acute = false;
  const double raw_wer = score_run({ref}, hyps, raw).per_utterance.at(0).wer;
  v.check(raw_wer == 2.0, "raw WER " + format_double(raw_wer) + " != 2.0");

  const double norm_wer =
      score_run({ref}, hyps, NormalizationConfig{}).per_utterance.at(0).wer;
  v.check(norm_wer == 0.0, "normalized WER " + format_double(norm_wer) + " != 0.0");
  return v;
}

// --------------------------------------------------------------------------
// 3. Phase-vocoder stretch: length within one hop of len/r, pitch held.

Verdict check_time_stretch_properties() {
  Verdict v;
  const int sr = 16000;
  const StretchParams params;  // hop 512
  for (double f0 : {220.0, 440.0, 1000.0, 2000.0}) {
    const AudioClip tone = test::make_tone(f0, 1.0, sr);
    for (double r : {0.8, 0.9, 1.1, 1.25}) {
      const AudioClip out = time_stretch(tone, StretchFactor(r), params);
      const std::string tag = format_double(f0) + " Hz, r = " + format_double(r) + ": ";

      const double want = static_cast<double>(tone.samples.size()) / r;
      const double len_err = std::abs(static_cast<double>(out.samples.size()) - want);
      v.check(len_err <= static_cast<double>(params.hop),
              tag + "length off by " + format_double(len_err) + " samples");

      const double measured = test::dominant_frequency(out);
      const double drift = std::abs(measured - f0) / f0;
      v.check(drift < 0.02, tag + "pitch drifted to " + format_double(measured) + " Hz");
    }
  }
  return v;
}

// --------------------------------------------------------------------------
// 4. Speed perturbation: length within one sample, pitch scales with rate.

Verdict check_speed_perturb_properties() {
  Verdict v;
  const int sr = 16000;
  for (double f0 : {220.0, 440.0, 1000.0, 2000.0}) {
    const AudioClip tone = test::make_tone(f0, 1.0, sr);
    for (double r : {0.8, 0.9, 1.1, 1.25}) {
      const AudioClip out = speed_perturb(tone, StretchFactor(r));
      const std::string tag = format_double(f0) + " Hz, r = " + format_double(r) + ": ";

      const long long want = std::llround(static_cast<double>(tone.samples.size()) / r);
      const long long len_err = std::llabs(static_cast<long long>(out.samples.size()) - want);
      v.check(len_err <= 1, tag + "length off by " + std::to_string(len_err) + " samples");

      const double measured = test::dominant_frequency(out);
      const double drift = std::abs(measured - r * f0) / (r * f0);
      v.check(drift < 0.02, tag + "pitch landed at " + format_double(measured) + " Hz");
    }
  }
  return v;
}

// --------------------------------------------------------------------------
// 5. Frequency warp: identity at 1.0, 10% shift at 1.1, seed-reproducible.

Verdict check_vtlp_properties() {
  Verdict v;
  const AudioClip tone = test::make_tone(1000.0, 0.5, 16000);
  VtlpConfig cfg;

  const AudioClip identity = vtlp_with_alpha(tone, cfg, 1.0);
  double worst = 0.0;
  const std::size_t n = std::min(identity.samples.size(), tone.samples.size());
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst,
                     std::abs(static_cast<double>(identity.samples[i]) - tone.samples[i]));
  }
  v.check(identity.samples.size() == tone.samples.size(), "identity changed the length");
  v.check(worst < 1e-3, "identity max abs error " + format_double(worst));

  const AudioClip warped = vtlp_with_alpha(tone, cfg, 1.1);
  const double measured = test::dominant_frequency(warped);
  v.check(std::abs(measured - 1100.0) / 1100.0 < 0.03,
          "warp 1.1 moved 1000 Hz to " + format_double(measured) + " Hz");

  cfg.seed = 2718;
  const AudioClip a = vtlp(tone, cfg);
  const AudioClip b = vtlp(tone, cfg);
  v.check(a.samples.size() == b.samples.size() &&
              std::equal(a.samples.begin(), a.samples.end(), b.samples.begin()),
          "same seed produced different samples");
  return v;
}

// --------------------------------------------------------------------------
// 6. Analysis/resynthesis round trip at 75% overlap is transparent.

Verdict check_stft_round_trip() {
  Verdict v;
  SplitMix rng(0x57F7);
  for (std::size_t n_fft : {512u, 2048u}) {
    AudioClip clip;
    clip.sample_rate = 16000;
    clip.samples.resize(8000 + rng.below(4000));
    for (float& s : clip.samples) s = static_cast<float>(rng.uniform(-0.9, 0.9));

    const Spectrogram spec = stft(clip, n_fft, n_fft / 4);
    const AudioClip back = istft(spec, 0, static_cast<long long>(clip.samples.size()));

    double worst = 0.0;
    for (std::size_t i = 0; i < clip.samples.size(); ++i) {
      worst = std::max(worst,
                       std::abs(static_cast<double>(back.samples[i]) - clip.samples[i]));
    }
    v.check(worst < 1e-6, "n_fft " + std::to_string(n_fft) + ": max abs error " +
                              format_double(worst));
  }
  return v;
}

// --------------------------------------------------------------------------
// 7. Frame matching: identity at k=1, pool mean at k=pool, oracle agreement.

// Minimal reference implementation: rank every pool frame, average the top k.
std::vector<float> knn_oracle(const std::vector<float>& src,
                              const std::vector<std::vector<float>>& pool, std::size_t k) {
  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < src.size(); ++i) {
      dot += static_cast<double>(src[i]) * pool[j][i];
      na += static_cast<double>(src[i]) * src[i];
      nb += static_cast<double>(pool[j][i]) * pool[j][i];
    }
    double s;
    if (na == 0.0 && nb == 0.0) {
      s = 1.0;
    } else if (na == 0.0 || nb == 0.0) {
      s = 0.0;
    } else {
      s = dot / (std::sqrt(na) * std::sqrt(nb));
    }
    ranked.emplace_back(s, j);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<float> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    double acc = 0.0;
    for (std::size_t r = 0; r < k; ++r) acc += pool[ranked[r].second][i];
    out[i] = static_cast<float>(acc / static_cast<double>(k));
  }
  return out;
}

Verdict check_knn_properties() {
  Verdict v;
  SplitMix rng(0x6E6E);

  // Random 8-dim sequences for the identity and pool-mean properties.
  FeatureSequence seq;
  seq.utterance_id = "seq";
  seq.feature_dim = 8;
  seq.frame_rate = 50.0;
  seq.values.resize(8 * 40);
  for (float& x : seq.values) x = static_cast<float>(rng.uniform(-1.0, 1.0));

  KnnConfig cfg;
  cfg.k = 1;
  const FeatureSequence self = knn_match(seq, seq, cfg);
  v.check(self.values == seq.values, "k=1 self-conversion is not the identity");

  cfg.k = 40;
  const FeatureSequence mean_seq = knn_match(seq, seq, cfg);
  for (std::size_t i = 0; i < 8 && v.ok; ++i) {
    double mean = 0.0;
    for (std::size_t t = 0; t < 40; ++t) mean += seq.frame(t)[i];
    mean /= 40.0;
    v.check(std::abs(mean_seq.values[i] - mean) < 1e-6,
            "k=pool mean off at dim " + std::to_string(i));
  }

  // Hand-checkable 2-D case, verified against the reference ranker.
  FeatureSequence source;
  source.utterance_id = "hand";
  source.feature_dim = 2;
  source.frame_rate = 50.0;
  source.values = {1.0f, 0.0f};
  FeatureSequence pool;
  pool.utterance_id = "pool";
  pool.feature_dim = 2;
  pool.frame_rate = 50.0;
  pool.values = {1.0f, 0.0f, 0.0f, 1.0f, -1.0f, 0.0f};

  cfg.k = 2;
  const FeatureSequence hand = knn_match(source, pool, cfg);
  const std::vector<float> expected =
      knn_oracle({1.0f, 0.0f}, {{1.0f, 0.0f}, {0.0f, 1.0f}, {-1.0f, 0.0f}}, 2);
  v.check(hand.values == expected, "hand example disagrees with the reference ranker");
  v.check(hand.values == std::vector<float>{0.5f, 0.5f}, "hand example is not (0.5, 0.5)");

  // Output frame count always equals the source frame count.
  for (std::size_t frames : {1u, 7u, 40u}) {
    FeatureSequence cut = seq;
    cut.values.resize(8 * frames);
    cfg.k = 5;
    const FeatureSequence out = knn_match(cut, seq, cfg);
    v.check(out.n_frames() == frames,
            "frame count changed for " + std::to_string(frames) + " input frames");
  }
  return v;
}

// --------------------------------------------------------------------------
// 8. Hold-out plans: 11 folds, disjoint prompts, 46/156 split, 1560 rows.

Verdict check_split_protocol() {
  Verdict v;
  test::CorpusOptions opt;
  opt.n_patients = 11;
  opt.n_controls = 8;
  opt.prompt_ids = test::default_prompt_ids();
  const std::vector<ManifestEntry> manifest = make_corpus(opt);
  const PromptSplitTable table =
      load_split_table(fs::path(AUGEVAL_DATA_DIR) / "default_prompt_split.tsv");

  std::map<std::string, std::string> prompt_of;  // utterance -> prompt
  for (const ManifestEntry& e : manifest) prompt_of[e.utterance_id] = e.prompt_id;

  const std::vector<SplitPlan> plans =
      make_loso_plans(manifest, table, Cohort::patient, TrainCohortFilter::kAllSpeakers);
  v.check(plans.size() == 11, std::to_string(plans.size()) + " folds instead of 11");

  for (const SplitPlan& plan : plans) {
    std::set<std::string> train_prompts, test_prompts;
    for (const std::string& id : plan.train) train_prompts.insert(prompt_of.at(id));
    for (const std::string& id : plan.test) test_prompts.insert(prompt_of.at(id));

    std::vector<std::string> overlap;
    std::set_intersection(train_prompts.begin(), train_prompts.end(), test_prompts.begin(),
                          test_prompts.end(), std::back_inserter(overlap));
    v.check(overlap.empty(), plan.held_out_speaker + ": train and test share prompts");
    v.check(test_prompts.size() == 46, plan.held_out_speaker + ": " +
                                           std::to_string(test_prompts.size()) +
                                           " test prompts instead of 46");
    v.check(train_prompts.size() == 156, plan.held_out_speaker + ": " +
                                             std::to_string(train_prompts.size()) +
                                             " train prompts instead of 156");
  }

  const std::vector<SplitPlan> strict =
      make_loso_plans(manifest, table, Cohort::patient, TrainCohortFilter::kPatientsOnly);
  for (const SplitPlan& plan : strict) {
    v.check(plan.train.size() == 1560, plan.held_out_speaker + ": patients-only fold has " +
                                           std::to_string(plan.train.size()) +
                                           " rows instead of 1560");
  }
  return v;
}

// --------------------------------------------------------------------------
// 9. Synthetic-speech import: 10 voices x 202 clips -> 2020 entries.

Verdict check_tts_arithmetic() {
  Verdict v;
  test::TempDir tmp;
  const fs::path clips = tmp.path() / "clips";
  {
    std::ofstream prompts(tmp.path() / "prompts.txt");
    for (int i = 1; i <= 202; ++i) prompts << "zin nummer " << i << "\n";
  }
  const AudioClip blip = test::make_tone(440.0, 0.05, 16000);
  for (int voice = 1; voice <= 10; ++voice) {
    const fs::path dir = clips / ("voice" + std::to_string(voice));
    fs::create_directories(dir);
    for (int i = 1; i <= 202; ++i) {
      write_wav(dir / (std::to_string(i) + ".wav"), blip);
    }
  }

  const std::vector<ManifestEntry> entries =
      ingest_tts(clips, tmp.path() / "prompts.txt", {}, tmp.path() / "out");
  v.check(entries.size() == 2020,
          std::to_string(entries.size()) + " entries instead of 2020");

  std::set<std::string> speakers;
  for (const ManifestEntry& e : entries) {
    speakers.insert(e.speaker_id);
    v.check(e.cohort == Cohort::synthetic, e.utterance_id + ": cohort is not synthetic");
    v.check(e.prompt_source == PromptSource::EXTERNAL,
            e.utterance_id + ": prompt source is not EXTERNAL");
    if (!v.ok) break;
  }
  v.check(speakers.size() == 10, std::to_string(speakers.size()) + " voices instead of 10");
  return v;
}

// --------------------------------------------------------------------------
// 10. Correction protocol against a live mock endpoint.

Verdict check_correction_protocol() {
  Verdict v;

  // Byte-exact prompt against the frozen golden file.
  const std::string golden_raw =
      test::read_file(fs::path(AUGEVAL_TEST_DATA_DIR) / "prompt_golden.txt");
  const std::string golden = golden_raw.substr(0, golden_raw.size() - 1);
  CorrectionConfig probe;
  probe.model_name = "m";
  probe.endpoint_url = "http://localhost:1/v1";
  v.check(build_prompt("de zon schijnt", probe) == golden,
          "prompt differs from the golden file");

  // The last bracketed span wins; empty spans do not count.
  v.check(extract_correction("[een] tekst [twee]") == std::optional<std::string>("twee"),
          "last-bracket extraction failed");
  v.check(extract_correction("[goed] resten []") == std::optional<std::string>("goed"),
          "empty spans must not count");
  v.check(extract_correction("geen haakjes") == std::nullopt,
          "bracket-free text must extract nothing");

  // Mock endpoint: u-ok gets a real correction, u-err only ever sees HTTP
  // failures and must fall back to its uncorrected text.
  test::MockChatServer server([](const httplib::Request& req, httplib::Response& res) {
    if (req.body.find("kapotte zin") != std::string::npos) {
      res.status = 503;
      res.set_content("overloaded", "text/plain");
      return;
    }
    res.set_content(test::chat_response("Prima: [de zon schijnt]"), "application/json");
  });

  std::vector<ManifestEntry> refs(2);
  refs[0].utterance_id = "u-ok";
  refs[0].speaker_id = "P01";
  refs[0].reference_text = "de zon schijnt";
  refs[1].utterance_id = "u-err";
  refs[1].speaker_id = "P01";
  refs[1].reference_text = "de zon schijnt";

  CorrectionConfig cfg;
  cfg.model_name = "test-model";
  cfg.endpoint_url = server.url();
  cfg.n_runs = 3;
  cfg.max_attempts = 2;
  cfg.backoff_s = 0.0;
  cfg.timeout_s = 5.0;

  const std::vector<Hypothesis> hyps = {{"u-ok", "de zon schijn"},
                                        {"u-err", "kapotte zin"}};
  const std::vector<CorrectionRecord> records = correct_run(hyps, cfg, nullptr);
  v.check(records.size() == 2, "record count");
  for (const CorrectionRecord& record : records) {
    v.check(record.per_run.size() == 3, record.utterance_id + ": run count");
  }
  const CorrectionRecord& err = records.front();  // sorted by id: u-err, u-ok
  const CorrectionRecord& ok = records.back();
  v.check(ok.utterance_id == "u-ok" && err.utterance_id == "u-err", "record order");
  for (int r = 0; r < 3 && v.ok; ++r) {
    v.check(!ok.per_run[r].fallback && ok.per_run[r].corrected == "de zon schijnt",
            "run " + std::to_string(r) + ": correction not applied");
    v.check(err.per_run[r].fallback && err.per_run[r].corrected == "kapotte zin",
            "run " + std::to_string(r) + ": fallback must keep the original text");
  }

  // Three per-run reports; failing requests score the uncorrected text.
  const MultiRunReport report = mean_wer_over_runs(records, refs);
  v.check(report.per_run.size() == 3, "per-run report count");
  if (v.ok) {
    // u-ok: corrected to the reference (0/3); u-err: "kapotte zin" vs the
    // 3-word reference = 3 errors / 3 words. Per-utterance mean = 1/2.
    const double expected_mean = 0.5;
    for (int r = 0; r < 3; ++r) {
      v.check(std::abs(report.per_run[r].overall_mean - expected_mean) < 1e-12,
              "run " + std::to_string(r) + " overall mean " +
                  format_double(report.per_run[r].overall_mean));
    }
    v.check(std::abs(report.mean_overall - expected_mean) < 1e-12,
            "mean over runs " + format_double(report.mean_overall));
    // The uncorrected baseline is worse than the corrected runs.
    v.check(report.uncorrected.overall_mean > expected_mean,
            "baseline should exceed the corrected mean");
  }
  return v;
}

// --------------------------------------------------------------------------
// 11. Number spelling matches the golden table; normalization is idempotent.

Verdict check_normalization_goldens() {
  Verdict v;
  std::ifstream table(fs::path(AUGEVAL_TEST_DATA_DIR) / "dutch_numbers_0_1000.tsv");
  v.check(table.is_open(), "golden table missing");
  std::string line;
  int rows = 0;
  while (v.ok && std::getline(table, line)) {
    const std::size_t tab = line.find('\t');
    const std::uint64_t n = std::stoull(line.substr(0, tab));
    const std::string expected = line.substr(tab + 1);
    const std::string got = dutch_cardinal(n);
    v.check(got == expected,
            std::to_string(n) + ": \"" + got + "\" instead of \"" + expected + "\"");
    ++rows;
  }
  v.check(rows == 1001, std::to_string(rows) + " golden rows instead of 1001");

  // Idempotence over random strings from a mixed alphabet (plain words,
  // digits, punctuation, a multi-byte letter, stray blanks).
  const std::vector<std::string> atoms = {
      "de",   "Zon", "2025", "10",  "kHz", ",",  ".",  "!",  "'",
      "één", " ",   "\t",  "30",  "z'n", "[",  "]",  "’s"};
  SplitMix rng(0x1D3A);
  for (int i = 0; i < 10000 && v.ok; ++i) {
    std::string s;
    const std::size_t parts = rng.below(12);
    for (std::size_t p = 0; p < parts; ++p) {
      s += atoms[static_cast<std::size_t>(rng.below(atoms.size()))];
    }
    const std::string once = normalize(s);
    const std::string twice = normalize(once);
    v.check(twice == once, "not idempotent for input \"" + s + "\"");
  }
  return v;
}

// --------------------------------------------------------------------------
// 12. Rerunning an augmentation command reproduces every output byte.

Verdict check_cli_determinism() {
  Verdict v;
  test::TempDir tmp;

  test::CorpusOptions opt;
  opt.n_patients = 1;
  opt.n_controls = 1;
  opt.prompt_ids = {"LIT1-1", "NEWS-1"};
  opt.write_audio = true;
  opt.audio_dir = tmp.path() / "audio";
  opt.duration_s = 0.3;
  const std::vector<ManifestEntry> corpus = make_corpus(opt);
  const fs::path manifest = tmp.path() / "manifest.jsonl";
  save_manifest(corpus, manifest);

  auto run = [&](const std::string& out_dir) {
    const std::string cmd = std::string(AUGEVAL_TOOL_BIN) + " augment --manifest '" +
                            manifest.string() + "' --method vtlp --cohort control --seed 42" +
                            " --jobs 2 --out '" + (tmp.path() / out_dir).string() +
                            "' > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  v.check(run("a") == 0, "first run failed");
  v.check(run("b") == 0, "second run failed");
  if (!v.ok) return v;

  v.check(test::files_identical(tmp.path() / "a" / "manifest.jsonl",
                                tmp.path() / "b" / "manifest.jsonl"),
          "manifests differ between reruns");

  int compared = 0;
  for (const fs::directory_entry& item :
       fs::directory_iterator(tmp.path() / "a" / "audio")) {
    const fs::path twin = tmp.path() / "b" / "audio" / item.path().filename();
    v.check(fs::exists(twin), item.path().filename().string() + " missing in rerun");
    if (!v.ok) return v;
    v.check(test::files_identical(item.path(), twin),
            item.path().filename().string() + " differs between reruns");
    ++compared;
  }
  v.check(compared == 2, std::to_string(compared) + " derived clips instead of 2");
  return v;
}

struct Criterion {
  const char* name;
  std::function<Verdict()> run;
  double budget_s;  // wall-clock bound the criterion must stay under
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"word scorer matches brute-force edit distance on 1000 random cases",
       check_edit_distance_oracle, 10.0},
      {"digit reference scores 200% raw and 0% normalized",
       check_digit_normalization_fact, 10.0},
      {"time stretch holds pitch and hits len/r within one hop",
       check_time_stretch_properties, 30.0},
      {"speed perturbation scales pitch and hits round(len/r) within one sample",
       check_speed_perturb_properties, 30.0},
      {"frequency warp: identity at 1.0, +10% at 1.1, seed-stable",
       check_vtlp_properties, 30.0},
      {"stft/istft round trip is transparent below 1e-6",
       check_stft_round_trip, 30.0},
      {"frame matching: k=1 identity, pool mean at k=pool, oracle agreement",
       check_knn_properties, 30.0},
      {"hold-out plans: 11 folds, disjoint prompts, 46/156, 1560 patient rows",
       check_split_protocol, 30.0},
      {"synthetic-speech import yields 2020 entries from 10 voices x 202 clips",
       check_tts_arithmetic, 60.0},
      {"correction protocol: golden prompt, bracket extraction, fallback, 3-run mean",
       check_correction_protocol, 5.0},
      {"number spelling golden table and normalization idempotence on 10000 strings",
       check_normalization_goldens, 30.0},
      {"augmentation rerun with one seed reproduces outputs byte for byte",
       check_cli_determinism, 60.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict verdict;
    const auto start = std::chrono::steady_clock::now();
    try {
      verdict = criteria[i].run();
    } catch (const std::exception& e) {
      verdict.ok = false;
      verdict.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (verdict.ok && elapsed > criteria[i].budget_s) {
      verdict.ok = false;
      verdict.detail = "took " + format_double(elapsed) + " s, budget " +
                       format_double(criteria[i].budget_s) + " s";
    }
    std::printf("[%s] %2zu/%zu %s (%.2f s)%s%s\n", verdict.ok ? "PASS" : "FAIL", i + 1,
                criteria.size(), criteria[i].name, elapsed, verdict.ok ? "" : " -- ",
                verdict.detail.c_str());
    std::fflush(stdout);
    if (!verdict.ok) ++failures;
  }

  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("%d of %zu criteria FAILED\n", failures, criteria.size());
  return 1;
}
