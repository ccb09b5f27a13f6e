// tests/unit/split_test.cc

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

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "augeval/manifest.h"
#include "augeval/split.h"
#include "support.h"

using namespace augeval;
using test::TempDir;

namespace {

PromptSplitTable default_table() {
  return load_split_table(std::filesystem::path(AUGEVAL_DATA_DIR) /
                          "default_prompt_split.tsv");
}

const ManifestEntry& entry_by_id(const std::vector<ManifestEntry>& manifest,
                                 const std::string& id) {
  const auto it = std::find_if(manifest.begin(), manifest.end(),
                               [&id](const ManifestEntry& e) { return e.utterance_id == id; });
  REQUIRE(it != manifest.end());
  return *it;
}

}  // namespace

TEST_CASE("split table parsing") {
  TempDir tmp;
  const auto path = tmp.path() / "table.tsv";

  SUBCASE("comments, blanks, and both separators are accepted") {
    std::ofstream(path) << "# header comment\n\nLIT1-1\ttrain\nNEWS-1 test  # trailing\n";
    const PromptSplitTable table = load_split_table(path);
    CHECK(table.assignments.size() == 2);
    CHECK(table.at("LIT1-1") == SplitAssignment::kTrain);
    CHECK(table.at("NEWS-1") == SplitAssignment::kTest);
    CHECK_THROWS_AS(table.at("LIT1-2"), std::out_of_range);
  }
  SUBCASE("duplicate prompt rejected with line number") {
    std::ofstream(path) << "LIT1-1 train\nLIT1-1 test\n";
    CHECK_THROWS_WITH_AS(load_split_table(path), doctest::Contains("2"),
                         std::runtime_error);
  }
  SUBCASE("unknown label rejected") {
    std::ofstream(path) << "LIT1-1 validation\n";
    CHECK_THROWS_AS(load_split_table(path), std::runtime_error);
  }
  SUBCASE("trailing junk rejected") {
    std::ofstream(path) << "LIT1-1 train extra\n";
    CHECK_THROWS_AS(load_split_table(path), std::runtime_error);
  }
}

TEST_CASE("shipped default split table covers 202 prompts, 156 train / 46 test") {
  const PromptSplitTable table = default_table();
  CHECK(table.assignments.size() == 202);

  std::map<std::string, std::pair<int, int>> per_block;  // prefix -> (train, test)
  int train = 0, test = 0;
  for (const auto& [prompt_id, assignment] : table.assignments) {
    auto& bucket = per_block[prompt_id.substr(0, prompt_id.find('-'))];
    if (assignment == SplitAssignment::kTrain) {
      ++train;
      ++bucket.first;
    } else {
      ++test;
      ++bucket.second;
    }
  }
  CHECK(train == 156);
  CHECK(test == 46);

  // Whole blocks go to one side except the news prompts, which split 46/30.
  CHECK(per_block["LIT1"] == std::make_pair(0, 8));
  CHECK(per_block["LIT2"] == std::make_pair(14, 0));
  CHECK(per_block["LIT3"] == std::make_pair(0, 8));
  CHECK(per_block["LIT4"] == std::make_pair(10, 0));
  CHECK(per_block["LIT5"] == std::make_pair(6, 0));
  CHECK(per_block["LIT6"] == std::make_pair(80, 0));
  CHECK(per_block["NEWS"] == std::make_pair(46, 30));

  // The ids the table covers are exactly the ids the corpus helper emits.
  for (const std::string& id : test::default_prompt_ids()) {
    CHECK_NOTHROW(table.at(id));
  }
}

TEST_CASE("loso plans are prompt-disjoint and speaker-exclusive") {
  test::CorpusOptions opt;
  opt.n_patients = 3;
  opt.n_controls = 2;
  opt.prompt_ids = test::default_prompt_ids();
  const std::vector<ManifestEntry> manifest = make_corpus(opt);
  const PromptSplitTable table = default_table();

  const std::vector<SplitPlan> plans =
      make_loso_plans(manifest, table, Cohort::patient, TrainCohortFilter::kAllSpeakers);
  REQUIRE(plans.size() == 3);

  std::map<std::string, const ManifestEntry*> by_id;
  for (const ManifestEntry& e : manifest) by_id[e.utterance_id] = &e;

  for (const SplitPlan& plan : plans) {
    // Test = held-out speaker's 46 test prompts; train never contains them.
    CHECK(plan.test.size() == 46);
    CHECK(plan.train.size() == 4 * 156);  // 4 remaining speakers x train prompts

    std::set<std::string> train_prompts, test_prompts;
    for (const std::string& id : plan.train) {
      const ManifestEntry* e = by_id.at(id);
      CHECK(e->speaker_id != plan.held_out_speaker);
      train_prompts.insert(e->prompt_id);
    }
    for (const std::string& id : plan.test) {
      const ManifestEntry* e = by_id.at(id);
      CHECK(e->speaker_id == plan.held_out_speaker);
      CHECK(e->provenance == Provenance::original);
      test_prompts.insert(e->prompt_id);
    }
    std::vector<std::string> overlap;
    std::set_intersection(train_prompts.begin(), train_prompts.end(), test_prompts.begin(),
                          test_prompts.end(), std::back_inserter(overlap));
    CHECK(overlap.empty());
  }
}

TEST_CASE("patients-only filter drops control originals from training") {
  test::CorpusOptions opt;
  opt.n_patients = 2;
  opt.n_controls = 2;
  opt.prompt_ids = {"LIT2-1", "LIT2-2", "LIT1-1"};  // two train prompts, one test
  const std::vector<ManifestEntry> manifest = make_corpus(opt);
  const PromptSplitTable table = default_table();

  const SplitPlan all = make_loso_plan(manifest, table, "P01",
                                       TrainCohortFilter::kAllSpeakers);
  CHECK(all.train.size() == 3 * 2);  // P02 + both controls, 2 train prompts each
  CHECK(all.test.size() == 1);

  const SplitPlan patients = make_loso_plan(manifest, table, "P01",
                                            TrainCohortFilter::kPatientsOnly);
  CHECK(patients.train.size() == 1 * 2);  // P02 only
  for (const std::string& id : patients.train) {
    CHECK(entry_by_id(manifest, id).cohort == Cohort::patient);
  }
}

TEST_CASE("derived entries follow their source speaker out of the fold") {
  test::CorpusOptions opt;
  opt.prompt_ids = {"LIT2-1", "LIT1-1"};
  std::vector<ManifestEntry> manifest = make_corpus(opt);

  // A stretched copy of a P01 train-prompt recording keeps speaker P01.
  ManifestEntry derived = entry_by_id(manifest, "P01_LIT2-1");
  derived.utterance_id += "_ts0.9";
  derived.provenance = Provenance::time_stretch;
  manifest.push_back(derived);

  // A derived copy on a TEST prompt must never train, whoever is held out.
  ManifestEntry leaky = entry_by_id(manifest, "P02_LIT1-1");
  leaky.utterance_id += "_ts0.9";
  leaky.provenance = Provenance::time_stretch;
  manifest.push_back(leaky);

  // A synthetic voice on an EXTERNAL prompt is train-eligible everywhere.
  ManifestEntry tts;
  tts.utterance_id = "tts_v1_1";
  tts.speaker_id = "tts_v1";
  tts.cohort = Cohort::synthetic;
  tts.prompt_id = "EXT-1";
  tts.prompt_source = PromptSource::EXTERNAL;
  tts.reference_text = "externe zin";
  tts.audio_path = "/nonexistent/tts_v1_1.wav";
  tts.duration_s = 1.0;
  tts.provenance = Provenance::tts;
  manifest.push_back(tts);

  const PromptSplitTable table = default_table();

  const SplitPlan hold_p2 = make_loso_plan(manifest, table, "P02",
                                           TrainCohortFilter::kAllSpeakers);
  CHECK(std::count(hold_p2.train.begin(), hold_p2.train.end(), "P01_LIT2-1_ts0.9") == 1);
  CHECK(std::count(hold_p2.train.begin(), hold_p2.train.end(), "P02_LIT1-1_ts0.9") == 0);
  CHECK(std::count(hold_p2.train.begin(), hold_p2.train.end(), "tts_v1_1") == 1);
  CHECK(std::count(hold_p2.test.begin(), hold_p2.test.end(), "P02_LIT1-1") == 1);
  // The held-out speaker's derived clip is not in test either: test is
  // original recordings only.
  CHECK(std::count(hold_p2.test.begin(), hold_p2.test.end(), "P02_LIT1-1_ts0.9") == 0);

  const SplitPlan hold_p1 = make_loso_plan(manifest, table, "P01",
                                           TrainCohortFilter::kAllSpeakers);
  // P01's derived clip vanishes with its speaker: not train, not test.
  CHECK(std::count(hold_p1.train.begin(), hold_p1.train.end(), "P01_LIT2-1_ts0.9") == 0);
  CHECK(std::count(hold_p1.test.begin(), hold_p1.test.end(), "P01_LIT2-1_ts0.9") == 0);

  CHECK_THROWS_AS(
      make_loso_plan(manifest, table, "NOBODY", TrainCohortFilter::kAllSpeakers),
      std::invalid_argument);
}

TEST_CASE("uncovered prompts are rejected") {
  test::CorpusOptions opt;
  opt.prompt_ids = {"LIT2-1"};
  const std::vector<ManifestEntry> manifest = make_corpus(opt);

  TempDir tmp;
  const auto path = tmp.path() / "partial.tsv";
  std::ofstream(path) << "LIT1-1 train\n";  // does not cover LIT2-1
  const PromptSplitTable partial = load_split_table(path);

  CHECK_THROWS_AS(make_loso_plan(manifest, partial, "P01", TrainCohortFilter::kAllSpeakers),
                  std::out_of_range);
}

TEST_CASE("composition summary buckets by provenance") {
  test::CorpusOptions opt;
  opt.prompt_ids = {"LIT2-1", "LIT2-2"};
  opt.duration_s = 36.0;  // 0.01 h per clip
  std::vector<ManifestEntry> manifest = make_corpus(opt);

  ManifestEntry derived = manifest.front();
  derived.utterance_id += "_sp0.9";
  derived.provenance = Provenance::speed_perturb;
  derived.duration_s = 40.0;
  manifest.push_back(derived);

  SplitPlan plan;
  plan.held_out_speaker = "none";
  for (const ManifestEntry& e : manifest) plan.train.push_back(e.utterance_id);

  const CompositionReport report = summarize_composition(plan, manifest);
  CHECK(report.total_count == 9);
  CHECK(report.per_provenance.at(Provenance::original).count == 8);
  CHECK(report.per_provenance.at(Provenance::speed_perturb).count == 1);
  CHECK(report.per_provenance.at(Provenance::original).duration_h ==
        doctest::Approx(8 * 0.01));
  CHECK(report.per_provenance.at(Provenance::speed_perturb).duration_h ==
        doctest::Approx(40.0 / 3600.0));
  CHECK(report.total_duration_h == doctest::Approx(8 * 0.01 + 40.0 / 3600.0));

  plan.train.push_back("ghost");
  CHECK_THROWS_AS(summarize_composition(plan, manifest), std::invalid_argument);
}

TEST_CASE("plans save/load round-trip") {
  TempDir tmp;
  std::vector<SplitPlan> plans(2);
  plans[0].held_out_speaker = "P01";
  plans[0].train = {"a", "b"};
  plans[0].test = {"c"};
  plans[1].held_out_speaker = "P02";
  plans[1].test = {"d"};

  const auto path = tmp.path() / "plans.json";
  save_plans(plans, path);
  const std::vector<SplitPlan> back = load_plans(path);
  REQUIRE(back.size() == 2);
  CHECK(back[0].held_out_speaker == "P01");
  CHECK(back[0].train == std::vector<std::string>{"a", "b"});
  CHECK(back[0].test == std::vector<std::string>{"c"});
  CHECK(back[1].held_out_speaker == "P02");
  CHECK(back[1].train.empty());
  CHECK(back[1].test == std::vector<std::string>{"d"});
}
