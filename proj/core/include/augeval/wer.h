// core/include/augeval/wer.h

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

#ifndef AUGEVAL_WER_H_
#define AUGEVAL_WER_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "augeval/manifest.h"
#include "augeval/normalize.h"

namespace augeval {

struct EditCounts {
  std::int64_t substitutions = 0;
  std::int64_t deletions = 0;
  std::int64_t insertions = 0;
  std::int64_t ref_len = 0;

  std::int64_t errors() const { return substitutions + deletions + insertions; }
  double rate() const {
    return ref_len > 0 ? static_cast<double>(errors()) / static_cast<double>(ref_len)
                       : 0.0;
  }
};

// Minimal-edit alignment with unit costs. The error total is the Levenshtein
// distance; the S/D/I split is taken from one optimal path with a fixed
// tie-break (substitution, then deletion, then insertion). The rate can
// exceed 1.0. Throws std::invalid_argument on an empty reference.
EditCounts wer_counts(const std::vector<std::string>& reference,
                      const std::vector<std::string>& hypothesis);

// One ASR output line: "<utterance_id>\t<text>" (a space also separates).
struct Hypothesis {
  std::string utterance_id;
  std::string text;
};

std::vector<Hypothesis> load_hypotheses(const std::filesystem::path& path);

struct UtteranceScore {
  std::string utterance_id;
  std::string speaker_id;
  EditCounts counts;
  double wer = 0.0;
};

struct SpeakerScore {
  std::int64_t n_utterances = 0;
  std::int64_t errors = 0;
  std::int64_t ref_len = 0;
  double mean_wer = 0.0;    // mean of utterance WERs
  double pooled_wer = 0.0;  // error sum / reference-length sum
};

// Both per-speaker aggregates are reported; "overall" values are unweighted
// means across speakers of the matching per-speaker aggregate.
struct WerReport {
  std::vector<UtteranceScore> per_utterance;  // sorted by utterance_id
  std::map<std::string, SpeakerScore> per_speaker;
  double overall_mean = 0.0;
  double overall_pooled = 0.0;
};

// Scores hypotheses against the manifest slice. Both sides are normalized
// with cfg before alignment. Throws on a hypothesis whose utterance id is
// not in the references and on a reference that normalizes to nothing.
WerReport score_run(const std::vector<ManifestEntry>& references,
                    const std::vector<Hypothesis>& hypotheses,
                    const NormalizationConfig& cfg = {});

void write_report_json(const WerReport& report, const std::filesystem::path& path);
void write_report_table(const WerReport& report, std::ostream& out);

}  // namespace augeval

#endif  // AUGEVAL_WER_H_
