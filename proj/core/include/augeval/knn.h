// core/include/augeval/knn.h

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

#ifndef AUGEVAL_KNN_H_
#define AUGEVAL_KNN_H_

#include <cstddef>
#include <string>

#include "augeval/features.h"

namespace augeval {

enum class Similarity { kCosine, kEuclidean };

Similarity parse_similarity(const std::string& text);
std::string to_string(Similarity similarity);

struct KnnConfig {
  std::size_t k = 8;
  Similarity similarity = Similarity::kCosine;
  std::size_t feature_dim = 0;  // 0 accepts whatever the inputs carry
};

// Replaces every source frame by the unweighted mean of the k most similar
// frames in the target pool. Ties break toward the lowest target index, so
// the result is fully deterministic. The output keeps the source's length,
// id, and frame rate. Throws std::invalid_argument on a dimension mismatch
// or a pool smaller than k.
FeatureSequence knn_match(const FeatureSequence& source, const FeatureSequence& target_pool,
                          const KnnConfig& cfg);

}  // namespace augeval

#endif  // AUGEVAL_KNN_H_
