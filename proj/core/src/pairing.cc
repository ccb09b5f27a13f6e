// core/src/pairing.cc

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

#include "augeval/pairing.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "augeval/rng.h"

namespace augeval {
namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

}  // namespace

std::map<std::string, std::string> pair_speakers(const std::vector<std::string>& sources,
                                                 const std::vector<std::string>& targets,
                                                 std::uint64_t seed) {
  const std::vector<std::string> src = sorted_unique(sources);
  std::vector<std::string> tgt = sorted_unique(targets);
  if (src.empty()) throw std::invalid_argument("pair_speakers: no source speakers");
  if (tgt.empty()) throw std::invalid_argument("pair_speakers: no target speakers");

  // Fisher-Yates with our own generator so the shuffle is identical on
  // every platform.
  SplitMix rng(seed);
  for (std::size_t i = tgt.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(tgt[i], tgt[j]);
  }

  std::map<std::string, std::string> pairing;
  for (std::size_t i = 0; i < src.size(); ++i) {
    pairing.emplace(src[i], tgt[i % tgt.size()]);
  }
  return pairing;
}

void save_pairing(const std::map<std::string, std::string>& pairing,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write pairing: " + path.string());
  }
  for (const auto& [source, target] : pairing) {
    out << source << '\t' << target << '\n';
  }
  if (!out) {
    throw std::runtime_error("pairing write failed: " + path.string());
  }
}

std::map<std::string, std::string> load_pairing(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open pairing: " + path.string());
  }
  std::map<std::string, std::string> pairing;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected source<TAB>target");
    }
    const std::string source = line.substr(0, tab);
    if (!pairing.emplace(source, line.substr(tab + 1)).second) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": duplicate source speaker: " + source);
    }
  }
  return pairing;
}

}  // namespace augeval
