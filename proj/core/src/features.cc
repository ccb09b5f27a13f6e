// core/src/features.cc

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

#include "augeval/features.h"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace augeval {
namespace {

constexpr char kMagic[4] = {'A', 'E', 'F', 'S'};

void put_u32(std::string* out, std::uint32_t v) {
  out->push_back(static_cast<char>(v & 0xff));
  out->push_back(static_cast<char>((v >> 8) & 0xff));
  out->push_back(static_cast<char>((v >> 16) & 0xff));
  out->push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u64(std::string* out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v & 0xffffffffu));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

void put_f32(std::string* out, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  put_u32(out, bits);
}

std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint64_t get_u64(const unsigned char* p) {
  return static_cast<std::uint64_t>(get_u32(p)) |
         (static_cast<std::uint64_t>(get_u32(p + 4)) << 32);
}

float get_f32(const unsigned char* p) {
  const std::uint32_t bits = get_u32(p);
  float v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

}  // namespace

void validate_features(const FeatureSequence& seq) {
  if (seq.feature_dim == 0) {
    throw std::invalid_argument("features: dimension must be positive");
  }
  if (seq.values.empty()) {
    throw std::invalid_argument("features: empty sequence");
  }
  if (seq.values.size() % seq.feature_dim != 0) {
    throw std::invalid_argument("features: value count is not a multiple of the dimension");
  }
  if (!(seq.frame_rate > 0.0)) {
    throw std::invalid_argument("features: frame rate must be positive");
  }
}

void save_features(const FeatureSequence& seq, const std::filesystem::path& path) {
  validate_features(seq);
  std::string out;
  out.reserve(20 + seq.values.size() * 4);
  out.append(kMagic, sizeof(kMagic));
  put_u32(&out, static_cast<std::uint32_t>(seq.feature_dim));
  put_f32(&out, static_cast<float>(seq.frame_rate));
  put_u64(&out, seq.n_frames());
  for (float v : seq.values) put_f32(&out, v);

  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot write features: " + path.string());
  }
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) {
    throw std::runtime_error("feature write failed: " + path.string());
  }
}

FeatureSequence load_features(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open features: " + path.string());
  }
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  if (bytes.size() < 20 || std::memcmp(data, kMagic, sizeof(kMagic)) != 0) {
    throw std::runtime_error(path.string() + ": not a feature container");
  }
  FeatureSequence seq;
  seq.utterance_id = path.stem().string();
  seq.feature_dim = get_u32(data + 4);
  seq.frame_rate = static_cast<double>(get_f32(data + 8));
  const std::uint64_t n_frames = get_u64(data + 12);
  const std::uint64_t want = n_frames * seq.feature_dim;
  if (bytes.size() != 20 + want * 4) {
    throw std::runtime_error(path.string() + ": truncated feature container");
  }
  seq.values.resize(static_cast<std::size_t>(want));
  for (std::uint64_t i = 0; i < want; ++i) {
    seq.values[static_cast<std::size_t>(i)] = get_f32(data + 20 + i * 4);
  }
  validate_features(seq);
  return seq;
}

}  // namespace augeval
