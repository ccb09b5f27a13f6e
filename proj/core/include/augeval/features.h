// core/include/augeval/features.h

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

#ifndef AUGEVAL_FEATURES_H_
#define AUGEVAL_FEATURES_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace augeval {

// A sequence of fixed-width feature frames (e.g. self-supervised speech
// embeddings produced by an external extractor).
struct FeatureSequence {
  std::string utterance_id;
  std::size_t feature_dim = 0;
  double frame_rate = 0.0;               // frames per second
  std::vector<float> values;             // frame-major, n_frames * feature_dim

  std::size_t n_frames() const { return feature_dim == 0 ? 0 : values.size() / feature_dim; }
  const float* frame(std::size_t t) const { return values.data() + t * feature_dim; }
  float* frame(std::size_t t) { return values.data() + t * feature_dim; }
};

// Throws std::invalid_argument on zero dimension, empty frames, a
// non-positive frame rate, or a value count that is not a multiple of the
// dimension.
void validate_features(const FeatureSequence& seq);

// Binary container: magic "AEFS", then little-endian u32 feature_dim,
// f32 frame_rate, u64 frame_count, then row-major f32 values. The
// utterance id is the file stem and is not stored in the file.
void save_features(const FeatureSequence& seq, const std::filesystem::path& path);
FeatureSequence load_features(const std::filesystem::path& path);

}  // namespace augeval

#endif  // AUGEVAL_FEATURES_H_
