// core/include/augeval/campaign.h

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

#ifndef AUGEVAL_CAMPAIGN_H_
#define AUGEVAL_CAMPAIGN_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "augeval/knn.h"
#include "augeval/manifest.h"
#include "augeval/stretch.h"
#include "augeval/vtlp.h"

namespace augeval {

enum class AugmentMethod { kTimeStretch, kSpeedPerturb, kVtlp, kKnnVc, kTtsIngest };

AugmentMethod parse_augment_method(const std::string& text);
std::string to_string(AugmentMethod method);

// One augmentation campaign. Exactly the parameters its method needs must
// be set; validate_spec rejects anything missing or extraneous.
struct AugmentSpec {
  AugmentMethod method = AugmentMethod::kTimeStretch;
  Cohort target_cohort = Cohort::control;

  std::optional<double> factor;      // time_stretch / speed_perturb
  std::optional<VtlpConfig> vtlp;    // vtlp
  std::optional<KnnConfig> knn;      // knnvc
  std::uint64_t pairing_seed = 0;    // knnvc
  std::filesystem::path features_dir;     // knnvc: <utterance_id>.feat inputs
  std::filesystem::path pairing_file;     // knnvc: reused if it exists
  std::filesystem::path clips_dir;        // tts_ingest: <voice>/<index>.wav
  std::filesystem::path prompts_file;     // tts_ingest: one text per line
  std::filesystem::path speaker_map_file; // tts_ingest: optional voice->id map

  int jobs = 1;  // per-utterance worker threads
};

void validate_spec(const AugmentSpec& spec);

// JSON description of the campaign parameters (method, settings, seed) for
// reproducibility records.
std::string describe_spec(const AugmentSpec& spec);

// Runs the campaign and returns the input manifest plus one new entry per
// targeted utterance (originals are never touched). Audio products land in
// out_dir/audio, feature products in out_dir/features. Targeted utterances
// are the original recordings of spec.target_cohort; an empty target set
// yields zero new entries. Throws on missing inputs or write failure.
std::vector<ManifestEntry> run_augmentation(const std::vector<ManifestEntry>& manifest,
                                            const AugmentSpec& spec,
                                            const std::filesystem::path& out_dir);

// Imports externally synthesized speech: clips_dir holds one directory per
// voice with clips named "<index>.wav", where index is the 1-based line of
// the matching text in prompts_file. Every clip is resampled to 16 kHz and
// written under out_dir/audio. speaker_map_file ("voice<TAB>speaker_id")
// may rename voices; pass an empty path to keep directory names. Entries
// come back sorted by (speaker, index) with synthetic cohort and EXTERNAL
// prompts. Throws on a clip without prompt text or unreadable audio.
std::vector<ManifestEntry> ingest_tts(const std::filesystem::path& clips_dir,
                                      const std::filesystem::path& prompts_file,
                                      const std::filesystem::path& speaker_map_file,
                                      const std::filesystem::path& out_dir);

constexpr int kCanonicalSampleRate = 16000;

}  // namespace augeval

#endif  // AUGEVAL_CAMPAIGN_H_
