// core/include/augeval/manifest.h

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

#ifndef AUGEVAL_MANIFEST_H_
#define AUGEVAL_MANIFEST_H_

#include <filesystem>
#include <string>
#include <vector>

namespace augeval {

enum class Cohort { patient, control, synthetic };

enum class PromptSource { LIT1, LIT2, LIT3, LIT4, LIT5, LIT6, NEWS, EXTERNAL };

enum class Provenance { original, time_stretch, speed_perturb, vtlp, knnvc, tts };

std::string to_string(Cohort c);
std::string to_string(PromptSource s);
std::string to_string(Provenance p);
Cohort parse_cohort(const std::string& s);
PromptSource parse_prompt_source(const std::string& s);
Provenance parse_provenance(const std::string& s);

// One utterance record. A corpus manifest is a line-delimited file of these,
// one JSON object per line; unknown fields are ignored on load.
struct ManifestEntry {
  std::string utterance_id;
  std::string speaker_id;     // for derived entries: the source speaker
  Cohort cohort = Cohort::patient;
  std::string prompt_id;
  PromptSource prompt_source = PromptSource::NEWS;
  std::string reference_text;
  std::string audio_path;     // absolute once loaded; .feat for knnvc output
  double duration_s = 0.0;
  Provenance provenance = Provenance::original;
};

// Loads and validates a manifest. Relative audio paths are resolved against
// the manifest's directory. Throws std::runtime_error with the offending
// line number on parse errors, duplicate utterance ids, or missing fields.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

// Writes one JSON object per line with a fixed field order. Audio paths are
// stored relative to the manifest's directory when possible, so a corpus
// tree can be moved or compared byte-for-byte across runs.
void save_manifest(const std::vector<ManifestEntry>& entries,
                   const std::filesystem::path& path);

// Checks entry invariants: unique utterance ids, nonnegative durations,
// cohort "synthetic" exactly for knnvc/tts provenance, EXTERNAL prompts only
// on tts entries. Throws std::runtime_error on the first violation.
void validate_manifest(const std::vector<ManifestEntry>& entries);

}  // namespace augeval

#endif  // AUGEVAL_MANIFEST_H_
