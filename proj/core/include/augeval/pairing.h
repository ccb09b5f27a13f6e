// core/include/augeval/pairing.h

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

#ifndef AUGEVAL_PAIRING_H_
#define AUGEVAL_PAIRING_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace augeval {

// Deterministically assigns each source speaker a target speaker: both
// lists are deduplicated and sorted, the targets are shuffled with the
// seed, and sources take targets in order, wrapping around when there are
// fewer targets than sources. Throws std::invalid_argument on empty input.
std::map<std::string, std::string> pair_speakers(const std::vector<std::string>& sources,
                                                 const std::vector<std::string>& targets,
                                                 std::uint64_t seed);

// Tab-separated "source<TAB>target" lines, one pair per line.
void save_pairing(const std::map<std::string, std::string>& pairing,
                  const std::filesystem::path& path);
std::map<std::string, std::string> load_pairing(const std::filesystem::path& path);

}  // namespace augeval

#endif  // AUGEVAL_PAIRING_H_
