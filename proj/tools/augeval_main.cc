// tools/augeval_main.cc

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

// Command-line front end: split / augment / score / correct subcommands
// over manifest-described speech corpora. Exit codes: 0 success, 2 usage
// error, 1 runtime failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "augeval/campaign.h"
#include "augeval/correction.h"
#include "augeval/manifest.h"
#include "augeval/normalize.h"
#include "augeval/split.h"
#include "augeval/version.h"
#include "augeval/wer.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// Refuses to clobber previous results unless --force was given.
void require_writable(const fs::path& path, bool force) {
  if (!force && fs::exists(path)) {
    throw std::invalid_argument("output already exists: " + path.string() +
                                " (use --force to overwrite)");
  }
}

std::string sanitize_filename(const std::string& name) {
  std::string out = name;
  for (char& c : out) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    if (!ok) c = '_';
  }
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

// Reproducibility record: the full effective configuration, written next to
// every subcommand's outputs.
void write_run_config(const fs::path& out_dir, const std::string& subcommand,
                      const ordered_json& config) {
  ordered_json doc;
  doc["tool"] = "augeval";
  doc["version"] = augeval::kVersion;
  doc["subcommand"] = subcommand;
  doc["config"] = config;
  write_text(out_dir / "run_config.json", doc.dump(2) + "\n");
}

ordered_json composition_to_json(const augeval::CompositionReport& report) {
  ordered_json per_provenance = ordered_json::object();
  for (const auto& [provenance, tally] : report.per_provenance) {
    per_provenance[augeval::to_string(provenance)] = {{"count", tally.count},
                                                      {"duration_h", tally.duration_h}};
  }
  return {{"total_count", report.total_count},
          {"total_duration_h", report.total_duration_h},
          {"per_provenance", per_provenance}};
}

struct SplitArgs {
  std::string manifest;
  std::string split_table;
  std::string cohort = "patient";
  std::string train_speakers = "all_speakers";
  std::string out;
  bool force = false;
};

int cmd_split(const SplitArgs& args) {
  const std::vector<augeval::ManifestEntry> manifest = augeval::load_manifest(args.manifest);
  const augeval::PromptSplitTable table = augeval::load_split_table(args.split_table);
  const augeval::Cohort held_out = augeval::parse_cohort(args.cohort);
  const augeval::TrainCohortFilter filter =
      augeval::parse_train_cohort_filter(args.train_speakers);

  const std::vector<augeval::SplitPlan> plans =
      augeval::make_loso_plans(manifest, table, held_out, filter);

  fs::create_directories(args.out);
  ordered_json folds = ordered_json::array();
  for (const augeval::SplitPlan& plan : plans) {
    const fs::path plan_path =
        fs::path(args.out) / ("fold_" + sanitize_filename(plan.held_out_speaker) + ".json");
    require_writable(plan_path, args.force);
    augeval::save_plans({plan}, plan_path);

    const augeval::CompositionReport composition =
        augeval::summarize_composition(plan, manifest);
    folds.push_back({{"held_out_speaker", plan.held_out_speaker},
                     {"n_train", plan.train.size()},
                     {"n_test", plan.test.size()},
                     {"plan_file", plan_path.filename().string()},
                     {"train_composition", composition_to_json(composition)}});
  }
  const fs::path summary_path = fs::path(args.out) / "summary.json";
  require_writable(summary_path, args.force);
  ordered_json summary;
  summary["folds"] = std::move(folds);
  write_text(summary_path, summary.dump(2) + "\n");

  write_run_config(args.out, "split",
                   {{"manifest", args.manifest},
                    {"split_table", args.split_table},
                    {"cohort", args.cohort},
                    {"train_speakers", args.train_speakers}});
  std::cout << plans.size() << " folds written to " << args.out << "\n";
  return 0;
}

struct AugmentArgs {
  std::string manifest;
  std::string method;
  std::string cohort = "control";
  std::string out;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool force = false;

  double factor = 0.9;
  double warp_lo = 0.9;
  double warp_hi = 1.1;
  double boundary_hz = 4800.0;
  std::size_t n_fft = 2048;
  std::size_t hop = 512;
  std::size_t k = 8;
  std::string similarity = "cosine";
  std::string features_dir;
  std::string pairing_file;
  std::string clips_dir;
  std::string prompts_file;
  std::string speaker_map;

  // which optional flags the user actually passed
  bool has_factor = false;
  bool has_vtlp = false;
  bool has_knn = false;
};

int cmd_augment(const AugmentArgs& args) {
  const augeval::AugmentMethod method = augeval::parse_augment_method(args.method);

  augeval::AugmentSpec spec;
  spec.method = method;
  spec.jobs = args.jobs;
  if (method != augeval::AugmentMethod::kTtsIngest) {
    spec.target_cohort = augeval::parse_cohort(args.cohort);
  }

  using augeval::AugmentMethod;
  const bool is_stretch =
      method == AugmentMethod::kTimeStretch || method == AugmentMethod::kSpeedPerturb;
  if (is_stretch || args.has_factor) spec.factor = args.factor;
  if (method == AugmentMethod::kVtlp || args.has_vtlp) {
    augeval::VtlpConfig cfg;
    cfg.warp_lo = args.warp_lo;
    cfg.warp_hi = args.warp_hi;
    cfg.boundary_hz = args.boundary_hz;
    cfg.n_fft = args.n_fft;
    cfg.hop = args.hop;
    cfg.seed = args.seed;
    spec.vtlp = cfg;
  }
  if (method == AugmentMethod::kKnnVc || args.has_knn) {
    augeval::KnnConfig cfg;
    cfg.k = args.k;
    cfg.similarity = augeval::parse_similarity(args.similarity);
    spec.knn = cfg;
    spec.pairing_seed = args.seed;
    spec.features_dir = args.features_dir;
    spec.pairing_file = args.pairing_file.empty() ? fs::path(args.out) / "pairing.tsv"
                                                  : fs::path(args.pairing_file);
  }
  if (method == AugmentMethod::kTtsIngest) {
    spec.clips_dir = args.clips_dir;
    spec.prompts_file = args.prompts_file;
    spec.speaker_map_file = args.speaker_map;
  }
  augeval::validate_spec(spec);

  const fs::path out_dir(args.out);
  const fs::path manifest_path = out_dir / "manifest.jsonl";
  require_writable(manifest_path, args.force);
  fs::create_directories(out_dir);

  const std::vector<augeval::ManifestEntry> manifest = augeval::load_manifest(args.manifest);
  const std::vector<augeval::ManifestEntry> augmented =
      augeval::run_augmentation(manifest, spec, out_dir);
  augeval::save_manifest(augmented, manifest_path);

  ordered_json config = ordered_json::parse(augeval::describe_spec(spec));
  config["manifest"] = args.manifest;
  config["seed"] = args.seed;
  config["jobs"] = args.jobs;
  write_run_config(out_dir, "augment", config);

  std::cout << "manifest grew from " << manifest.size() << " to " << augmented.size()
            << " entries; written to " << manifest_path.string() << "\n";
  return 0;
}

struct ScoreArgs {
  std::string manifest;
  std::string hypotheses;
  std::string out;
  bool force = false;
  bool raw = false;
  bool no_lowercase = false;
  bool no_punct = false;
  bool no_numbers = false;
  bool no_fold_e = false;
  bool no_collapse = false;
};

augeval::NormalizationConfig norm_config(bool raw, bool no_lowercase, bool no_punct,
                                         bool no_numbers, bool no_fold_e, bool no_collapse) {
  augeval::NormalizationConfig cfg;
  cfg.lowercase = !raw && !no_lowercase;
  cfg.strip_punct = !raw && !no_punct;
  cfg.numbers_to_words = !raw && !no_numbers;
  cfg.fold_e_acute = !raw && !no_fold_e;
  cfg.collapse_whitespace = !raw && !no_collapse;
  return cfg;
}

int cmd_score(const ScoreArgs& args) {
  const std::vector<augeval::ManifestEntry> manifest = augeval::load_manifest(args.manifest);
  const std::vector<augeval::Hypothesis> hypotheses =
      augeval::load_hypotheses(args.hypotheses);
  const augeval::NormalizationConfig cfg =
      norm_config(args.raw, args.no_lowercase, args.no_punct, args.no_numbers,
                  args.no_fold_e, args.no_collapse);

  const augeval::WerReport report = augeval::score_run(manifest, hypotheses, cfg);

  fs::create_directories(args.out);
  const fs::path json_path = fs::path(args.out) / "wer_report.json";
  const fs::path table_path = fs::path(args.out) / "wer_report.txt";
  require_writable(json_path, args.force);
  require_writable(table_path, args.force);
  augeval::write_report_json(report, json_path);
  {
    std::ofstream table(table_path, std::ios::binary);
    if (!table) throw std::runtime_error("cannot write: " + table_path.string());
    augeval::write_report_table(report, table);
  }
  augeval::write_report_table(report, std::cout);

  write_run_config(args.out, "score",
                   {{"manifest", args.manifest},
                    {"hypotheses", args.hypotheses},
                    {"normalize",
                     {{"lowercase", cfg.lowercase},
                      {"strip_punct", cfg.strip_punct},
                      {"numbers_to_words", cfg.numbers_to_words},
                      {"fold_e_acute", cfg.fold_e_acute},
                      {"collapse_whitespace", cfg.collapse_whitespace}}}});
  return 0;
}

struct CorrectArgs {
  std::string manifest;
  std::string hypotheses;
  std::string endpoint;
  std::string model;
  std::string out;
  int runs = 3;
  double temperature = 0.0;
  int max_tokens = 400;
  double timeout_s = 30.0;
  std::string language = "Dutch";
  int max_in_flight = 4;
  std::string api_key_env = "AUGEVAL_API_KEY";
  bool force = false;
};

int cmd_correct(const CorrectArgs& args) {
  augeval::CorrectionConfig cfg;
  cfg.model_name = args.model;
  cfg.temperature = args.temperature;
  cfg.max_tokens = args.max_tokens;
  cfg.n_runs = args.runs;
  cfg.endpoint_url = args.endpoint;
  cfg.timeout_s = args.timeout_s;
  cfg.language_label = args.language;
  cfg.max_in_flight = args.max_in_flight;
  augeval::validate_correction_config(cfg);

  // A remote endpoint without credentials is a configuration error; fail
  // before any request leaves the machine.
  const augeval::ParsedUrl url = augeval::parse_url(args.endpoint);
  const char* key = std::getenv(args.api_key_env.c_str());
  if (key != nullptr && key[0] != '\0') {
    cfg.api_key = key;
  } else if (!augeval::is_loopback_host(url.host)) {
    throw std::invalid_argument("remote endpoint " + url.host +
                                " requires an API key in $" + args.api_key_env);
  }

  const std::vector<augeval::ManifestEntry> manifest = augeval::load_manifest(args.manifest);
  const std::vector<augeval::Hypothesis> hypotheses =
      augeval::load_hypotheses(args.hypotheses);

  const fs::path out_dir(args.out);
  const fs::path records_path = out_dir / "records.jsonl";
  require_writable(records_path, args.force);
  fs::create_directories(out_dir);

  std::ofstream audit(out_dir / "audit.jsonl", std::ios::binary);
  const std::vector<augeval::CorrectionRecord> records =
      augeval::correct_run(hypotheses, cfg, &audit);
  augeval::save_records(records, records_path);

  const augeval::MultiRunReport report =
      augeval::mean_wer_over_runs(records, manifest, augeval::NormalizationConfig{});

  ordered_json summary;
  summary["uncorrected"] = {{"mean_wer", report.uncorrected.overall_mean},
                            {"pooled_wer", report.uncorrected.overall_pooled}};
  ordered_json runs = ordered_json::array();
  for (std::size_t r = 0; r < report.per_run.size(); ++r) {
    const fs::path run_report = out_dir / ("wer_run" + std::to_string(r + 1) + ".json");
    augeval::write_report_json(report.per_run[r], run_report);

    std::ofstream hyp_out(out_dir / ("run" + std::to_string(r + 1) + ".hyp"),
                          std::ios::binary);
    for (const augeval::CorrectionRecord& record : records) {
      hyp_out << record.utterance_id << '\t' << record.per_run[r].corrected << '\n';
    }
    runs.push_back({{"mean_wer", report.per_run[r].overall_mean},
                    {"pooled_wer", report.per_run[r].overall_pooled}});
  }
  summary["runs"] = std::move(runs);
  summary["mean_over_runs"] = {{"mean_wer", report.mean_overall},
                               {"pooled_wer", report.mean_overall_pooled}};
  write_text(out_dir / "summary.json", summary.dump(2) + "\n");

  write_run_config(out_dir, "correct",
                   {{"manifest", args.manifest},
                    {"hypotheses", args.hypotheses},
                    {"endpoint", args.endpoint},
                    {"model", args.model},
                    {"runs", args.runs},
                    {"temperature", args.temperature},
                    {"max_tokens", args.max_tokens},
                    {"timeout_s", args.timeout_s},
                    {"language", args.language},
                    {"max_in_flight", args.max_in_flight}});

  std::cout << "run        mean WER   pooled WER\n";
  std::cout << "---------------------------------\n";
  auto line = [](const std::string& label, double mean, double pooled) {
    std::printf("%-10s %9.4f %12.4f\n", label.c_str(), mean, pooled);
  };
  line("original", report.uncorrected.overall_mean, report.uncorrected.overall_pooled);
  for (std::size_t r = 0; r < report.per_run.size(); ++r) {
    line("run " + std::to_string(r + 1), report.per_run[r].overall_mean,
         report.per_run[r].overall_pooled);
  }
  line("mean", report.mean_overall, report.mean_overall_pooled);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Speech-corpus augmentation and WER evaluation toolkit"};
  app.set_version_flag("--version", std::string(augeval::kVersion));
  app.require_subcommand(1);

  SplitArgs split_args;
  CLI::App* split = app.add_subcommand("split", "Build leave-one-speaker-out fold plans");
  split->add_option("--manifest", split_args.manifest, "Manifest file (JSON lines)")
      ->required();
  split->add_option("--split-table", split_args.split_table,
                    "Prompt split table (prompt_id train|test)")
      ->required();
  split->add_option("--cohort", split_args.cohort, "Cohort to hold out (patient|control)")
      ->capture_default_str();
  split->add_option("--train-speakers", split_args.train_speakers,
                    "Original recordings eligible for training "
                    "(all_speakers|patients_only)")
      ->capture_default_str();
  split->add_option("--out", split_args.out, "Output directory")->required();
  split->add_flag("--force", split_args.force, "Overwrite existing outputs");

  AugmentArgs aug_args;
  CLI::App* augment = app.add_subcommand("augment", "Run an augmentation campaign");
  augment->add_option("--manifest", aug_args.manifest, "Manifest file")->required();
  augment
      ->add_option("--method", aug_args.method,
                   "time_stretch|speed_perturb|vtlp|knnvc|tts_ingest")
      ->required();
  augment->add_option("--cohort", aug_args.cohort, "Cohort to augment (patient|control)")
      ->capture_default_str();
  augment->add_option("--out", aug_args.out, "Output directory")->required();
  augment->add_option("--seed", aug_args.seed, "Seed for all randomized choices")
      ->capture_default_str();
  augment->add_option("--jobs", aug_args.jobs, "Worker threads")->capture_default_str();
  augment->add_flag("--force", aug_args.force, "Overwrite existing outputs");
  CLI::Option* factor_opt =
      augment->add_option("--factor", aug_args.factor,
                          "Playback rate for time_stretch/speed_perturb; r < 1 slows "
                          "down and lengthens")
          ->capture_default_str();
  CLI::Option* warp_lo = augment->add_option("--warp-lo", aug_args.warp_lo, "VTLP warp lower bound")
                             ->capture_default_str();
  CLI::Option* warp_hi = augment->add_option("--warp-hi", aug_args.warp_hi, "VTLP warp upper bound")
                             ->capture_default_str();
  CLI::Option* boundary =
      augment->add_option("--boundary-hz", aug_args.boundary_hz, "VTLP warp boundary (Hz)")
          ->capture_default_str();
  augment->add_option("--n-fft", aug_args.n_fft, "VTLP analysis window")->capture_default_str();
  augment->add_option("--hop", aug_args.hop, "VTLP analysis hop")->capture_default_str();
  CLI::Option* k_opt =
      augment->add_option("--k", aug_args.k, "Neighbors for knnvc")->capture_default_str();
  CLI::Option* sim_opt = augment
                             ->add_option("--similarity", aug_args.similarity,
                                          "knnvc similarity (cosine|euclidean)")
                             ->capture_default_str();
  CLI::Option* feat_opt = augment->add_option("--features-dir", aug_args.features_dir,
                                              "Directory of <utterance_id>.feat inputs");
  augment->add_option("--pairing", aug_args.pairing_file,
                      "Speaker pairing file (created if missing; default <out>/pairing.tsv)");
  augment->add_option("--clips-dir", aug_args.clips_dir,
                      "tts_ingest: <voice>/<index>.wav tree");
  augment->add_option("--prompts", aug_args.prompts_file,
                      "tts_ingest: prompt text file, one line per index");
  augment->add_option("--speaker-map", aug_args.speaker_map,
                      "tts_ingest: voice<TAB>speaker_id renames");

  ScoreArgs score_args;
  CLI::App* score = app.add_subcommand("score", "Score hypotheses against references");
  score->add_option("--manifest", score_args.manifest, "Manifest file")->required();
  score->add_option("--hypotheses", score_args.hypotheses,
                    "Hypothesis file (utterance_id<TAB>text)")
      ->required();
  score->add_option("--out", score_args.out, "Output directory")->required();
  score->add_flag("--force", score_args.force, "Overwrite existing outputs");
  score->add_flag("--raw", score_args.raw, "Disable all normalization");
  score->add_flag("--no-lowercase", score_args.no_lowercase, "Keep letter case");
  score->add_flag("--no-punct", score_args.no_punct, "Keep punctuation");
  score->add_flag("--no-numbers", score_args.no_numbers, "Keep digits unexpanded");
  score->add_flag("--no-fold-e", score_args.no_fold_e, "Keep e-acute");
  score->add_flag("--no-collapse", score_args.no_collapse, "Keep whitespace as-is");

  CorrectArgs correct_args;
  CLI::App* correct =
      app.add_subcommand("correct", "Correct hypotheses through a chat-completion API");
  correct->add_option("--manifest", correct_args.manifest, "Manifest file")->required();
  correct->add_option("--hypotheses", correct_args.hypotheses, "Hypothesis file")->required();
  correct->add_option("--endpoint", correct_args.endpoint, "Chat-completion URL")->required();
  correct->add_option("--model", correct_args.model, "Model name")->required();
  correct->add_option("--out", correct_args.out, "Output directory")->required();
  correct->add_option("--runs", correct_args.runs, "Correction passes")->capture_default_str();
  correct->add_option("--temperature", correct_args.temperature, "Sampling temperature")
      ->capture_default_str();
  correct->add_option("--max-tokens", correct_args.max_tokens, "Completion token cap")
      ->capture_default_str();
  correct->add_option("--timeout", correct_args.timeout_s, "Request timeout (s)")
      ->capture_default_str();
  correct->add_option("--language", correct_args.language, "Language label in the prompt")
      ->capture_default_str();
  correct->add_option("--max-in-flight", correct_args.max_in_flight, "Concurrent requests")
      ->capture_default_str();
  correct->add_option("--api-key-env", correct_args.api_key_env,
                      "Environment variable holding the API key")
      ->capture_default_str();
  correct->add_flag("--force", correct_args.force, "Overwrite existing outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*split) return cmd_split(split_args);
    if (*augment) {
      aug_args.has_factor = factor_opt->count() > 0;
      aug_args.has_vtlp =
          warp_lo->count() > 0 || warp_hi->count() > 0 || boundary->count() > 0;
      aug_args.has_knn =
          k_opt->count() > 0 || sim_opt->count() > 0 || feat_opt->count() > 0;
      return cmd_augment(aug_args);
    }
    if (*score) return cmd_score(score_args);
    if (*correct) return cmd_correct(correct_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "augeval: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "augeval: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "augeval: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
