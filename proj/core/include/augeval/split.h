// core/include/augeval/split.h

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

#ifndef AUGEVAL_SPLIT_H_
#define AUGEVAL_SPLIT_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "augeval/manifest.h"

namespace augeval {

enum class SplitAssignment { kTrain, kTest };

// Prompt-id -> train/test. The assignment depends only on the prompt, never
// on the speaker, so train and test never share a prompt.
struct PromptSplitTable {
  std::map<std::string, SplitAssignment> assignments;

  // Throws std::out_of_range when the prompt is not covered.
  SplitAssignment at(const std::string& prompt_id) const;
};

// Two-column text file: "<prompt_id> <train|test>"; '#' starts a comment.
PromptSplitTable load_split_table(const std::filesystem::path& path);

// Which original recordings may enter a training set.
enum class TrainCohortFilter { kAllSpeakers, kPatientsOnly };

TrainCohortFilter parse_train_cohort_filter(const std::string& text);
std::string to_string(TrainCohortFilter filter);

// One leave-one-speaker-out fold. Lists hold utterance ids in manifest
// order.
struct SplitPlan {
  std::string held_out_speaker;
  std::vector<std::string> train;
  std::vector<std::string> test;
};

// Builds the fold that holds out one speaker. Test: the speaker's own
// original recordings whose prompt is assigned "test". Train: everything
// from other speakers that is eligible — original recordings passing the
// cohort filter whose prompt is assigned "train", plus derived/synthetic
// entries on train prompts (EXTERNAL prompts are always train-eligible).
// Throws on an unknown speaker or an uncovered non-EXTERNAL prompt.
SplitPlan make_loso_plan(const std::vector<ManifestEntry>& manifest,
                         const PromptSplitTable& table, const std::string& held_out_speaker,
                         TrainCohortFilter filter);

// One plan per speaker (sorted by id) whose original recordings belong to
// held_out_cohort. Throws if the cohort has no speakers.
std::vector<SplitPlan> make_loso_plans(const std::vector<ManifestEntry>& manifest,
                                       const PromptSplitTable& table, Cohort held_out_cohort,
                                       TrainCohortFilter filter);

struct ProvenanceTally {
  std::int64_t count = 0;
  double duration_h = 0.0;
};

// Training-set composition of a fold, bucketed by provenance.
struct CompositionReport {
  std::map<Provenance, ProvenanceTally> per_provenance;
  std::int64_t total_count = 0;
  double total_duration_h = 0.0;
};

// Throws std::invalid_argument on an utterance id with no manifest entry.
CompositionReport summarize_composition(const SplitPlan& plan,
                                        const std::vector<ManifestEntry>& manifest);

void save_plans(const std::vector<SplitPlan>& plans, const std::filesystem::path& path);
std::vector<SplitPlan> load_plans(const std::filesystem::path& path);

}  // namespace augeval

#endif  // AUGEVAL_SPLIT_H_
