// core/src/knn.cc

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

#include "augeval/knn.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace augeval {
namespace {

// Higher is more similar for both metrics (euclidean is negated squared
// distance). Cosine of two zero vectors is 1 so that a frame is always its
// own nearest neighbor; zero against non-zero is 0.
double score(const float* a, const float* b, std::size_t dim, Similarity similarity) {
  if (similarity == Similarity::kEuclidean) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
      acc += d * d;
    }
    return -acc;
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    dot += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    na += static_cast<double>(a[i]) * static_cast<double>(a[i]);
    nb += static_cast<double>(b[i]) * static_cast<double>(b[i]);
  }
  if (na == 0.0 && nb == 0.0) return 1.0;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

Similarity parse_similarity(const std::string& text) {
  if (text == "cosine") return Similarity::kCosine;
  if (text == "euclidean") return Similarity::kEuclidean;
  throw std::invalid_argument("unknown similarity: " + text +
                              " (want cosine or euclidean)");
}

std::string to_string(Similarity similarity) {
  return similarity == Similarity::kCosine ? "cosine" : "euclidean";
}

FeatureSequence knn_match(const FeatureSequence& source, const FeatureSequence& target_pool,
                          const KnnConfig& cfg) {
  validate_features(source);
  validate_features(target_pool);
  if (cfg.k == 0) throw std::invalid_argument("knn_match: k must be positive");
  if (source.feature_dim != target_pool.feature_dim) {
    throw std::invalid_argument("knn_match: dimension mismatch: " +
                                std::to_string(source.feature_dim) + " vs " +
                                std::to_string(target_pool.feature_dim));
  }
  if (cfg.feature_dim != 0 && cfg.feature_dim != source.feature_dim) {
    throw std::invalid_argument("knn_match: configured dimension " +
                                std::to_string(cfg.feature_dim) + " != input dimension " +
                                std::to_string(source.feature_dim));
  }
  const std::size_t pool = target_pool.n_frames();
  if (pool < cfg.k) {
    throw std::invalid_argument("knn_match: pool of " + std::to_string(pool) +
                                " frames is smaller than k = " + std::to_string(cfg.k));
  }
  const std::size_t dim = source.feature_dim;

  FeatureSequence out;
  out.utterance_id = source.utterance_id;
  out.feature_dim = dim;
  out.frame_rate = source.frame_rate;
  out.values.resize(source.values.size());

  std::vector<std::pair<double, std::size_t>> ranked(pool);
  std::vector<double> mean(dim);
  for (std::size_t t = 0; t < source.n_frames(); ++t) {
    const float* src = source.frame(t);
    for (std::size_t j = 0; j < pool; ++j) {
      ranked[j] = {score(src, target_pool.frame(j), dim, cfg.similarity), j};
    }
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<long>(cfg.k),
                      ranked.end(), [](const auto& a, const auto& b) {
                        if (a.first != b.first) return a.first > b.first;
                        return a.second < b.second;
                      });
    std::fill(mean.begin(), mean.end(), 0.0);
    for (std::size_t r = 0; r < cfg.k; ++r) {
      const float* frame = target_pool.frame(ranked[r].second);
      for (std::size_t i = 0; i < dim; ++i) mean[i] += static_cast<double>(frame[i]);
    }
    float* dst = out.frame(t);
    for (std::size_t i = 0; i < dim; ++i) {
      dst[i] = static_cast<float>(mean[i] / static_cast<double>(cfg.k));
    }
  }
  return out;
}

}  // namespace augeval
