// core/src/split.cc

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

#include "augeval/split.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace augeval {

SplitAssignment PromptSplitTable::at(const std::string& prompt_id) const {
  auto it = assignments.find(prompt_id);
  if (it == assignments.end()) {
    throw std::out_of_range("split table does not cover prompt: " + prompt_id);
  }
  return it->second;
}

PromptSplitTable load_split_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open split table: " + path.string());
  }
  PromptSplitTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    std::string prompt_id;
    std::string label;
    if (!(row >> prompt_id)) continue;  // blank or comment-only line
    auto fail = [&](const std::string& message) -> std::runtime_error {
      return std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " +
                                message);
    };
    if (!(row >> label)) throw fail("missing train/test label");
    std::string extra;
    if (row >> extra) throw fail("trailing content: " + extra);
    SplitAssignment assignment;
    if (label == "train") {
      assignment = SplitAssignment::kTrain;
    } else if (label == "test") {
      assignment = SplitAssignment::kTest;
    } else {
      throw fail("label must be train or test, got: " + label);
    }
    if (!table.assignments.emplace(prompt_id, assignment).second) {
      throw fail("duplicate prompt id: " + prompt_id);
    }
  }
  return table;
}

TrainCohortFilter parse_train_cohort_filter(const std::string& text) {
  if (text == "all_speakers") return TrainCohortFilter::kAllSpeakers;
  if (text == "patients_only") return TrainCohortFilter::kPatientsOnly;
  throw std::invalid_argument("unknown cohort filter: " + text +
                              " (want all_speakers or patients_only)");
}

std::string to_string(TrainCohortFilter filter) {
  return filter == TrainCohortFilter::kAllSpeakers ? "all_speakers" : "patients_only";
}

namespace {

bool train_eligible(const ManifestEntry& entry, const PromptSplitTable& table,
                    TrainCohortFilter filter) {
  if (entry.provenance == Provenance::original) {
    const bool cohort_ok = filter == TrainCohortFilter::kAllSpeakers
                               ? (entry.cohort == Cohort::patient ||
                                  entry.cohort == Cohort::control)
                               : entry.cohort == Cohort::patient;
    if (!cohort_ok) return false;
  }
  // Externally-prompted entries (synthetic speech) have no split assignment
  // and may always be trained on.
  if (entry.prompt_source == PromptSource::EXTERNAL) return true;
  return table.at(entry.prompt_id) == SplitAssignment::kTrain;
}

}  // namespace

SplitPlan make_loso_plan(const std::vector<ManifestEntry>& manifest,
                         const PromptSplitTable& table, const std::string& held_out_speaker,
                         TrainCohortFilter filter) {
  bool known = false;
  for (const ManifestEntry& entry : manifest) {
    if (entry.speaker_id == held_out_speaker && entry.provenance == Provenance::original) {
      known = true;
      break;
    }
  }
  if (!known) {
    throw std::invalid_argument("no original recordings for speaker: " + held_out_speaker);
  }

  SplitPlan plan;
  plan.held_out_speaker = held_out_speaker;
  for (const ManifestEntry& entry : manifest) {
    if (entry.speaker_id == held_out_speaker) {
      if (entry.provenance == Provenance::original &&
          entry.prompt_source != PromptSource::EXTERNAL &&
          table.at(entry.prompt_id) == SplitAssignment::kTest) {
        plan.test.push_back(entry.utterance_id);
      }
      // Everything else from the held-out speaker (his derived clips
      // included) is dropped: it must not leak into training.
      continue;
    }
    if (train_eligible(entry, table, filter)) {
      plan.train.push_back(entry.utterance_id);
    }
  }
  return plan;
}

std::vector<SplitPlan> make_loso_plans(const std::vector<ManifestEntry>& manifest,
                                       const PromptSplitTable& table, Cohort held_out_cohort,
                                       TrainCohortFilter filter) {
  std::set<std::string> speakers;
  for (const ManifestEntry& entry : manifest) {
    if (entry.cohort == held_out_cohort && entry.provenance == Provenance::original) {
      speakers.insert(entry.speaker_id);
    }
  }
  if (speakers.empty()) {
    throw std::invalid_argument("no speakers with original recordings in cohort: " +
                                to_string(held_out_cohort));
  }
  std::vector<SplitPlan> plans;
  plans.reserve(speakers.size());
  for (const std::string& speaker : speakers) {
    plans.push_back(make_loso_plan(manifest, table, speaker, filter));
  }
  return plans;
}

CompositionReport summarize_composition(const SplitPlan& plan,
                                        const std::vector<ManifestEntry>& manifest) {
  std::unordered_map<std::string, const ManifestEntry*> by_id;
  by_id.reserve(manifest.size());
  for (const ManifestEntry& entry : manifest) by_id.emplace(entry.utterance_id, &entry);

  CompositionReport report;
  for (const std::string& id : plan.train) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw std::invalid_argument("plan references unknown utterance: " + id);
    }
    const ManifestEntry& entry = *it->second;
    ProvenanceTally& tally = report.per_provenance[entry.provenance];
    tally.count += 1;
    tally.duration_h += entry.duration_s / 3600.0;
    report.total_count += 1;
    report.total_duration_h += entry.duration_s / 3600.0;
  }
  return report;
}

void save_plans(const std::vector<SplitPlan>& plans, const std::filesystem::path& path) {
  nlohmann::ordered_json folds = nlohmann::ordered_json::array();
  for (const SplitPlan& plan : plans) {
    folds.push_back({{"held_out_speaker", plan.held_out_speaker},
                     {"train", plan.train},
                     {"test", plan.test}});
  }
  nlohmann::ordered_json doc;
  doc["folds"] = std::move(folds);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write plans: " + path.string());
  }
  out << doc.dump(2) << '\n';
}

std::vector<SplitPlan> load_plans(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open plans: " + path.string());
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("folds") || !doc["folds"].is_array()) {
    throw std::runtime_error(path.string() + ": expected an object with a folds array");
  }
  std::vector<SplitPlan> plans;
  for (const auto& fold : doc["folds"]) {
    SplitPlan plan;
    plan.held_out_speaker = fold.at("held_out_speaker").get<std::string>();
    plan.train = fold.at("train").get<std::vector<std::string>>();
    plan.test = fold.at("test").get<std::vector<std::string>>();
    plans.push_back(std::move(plan));
  }
  return plans;
}

}  // namespace augeval
