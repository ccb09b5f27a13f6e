// core/include/augeval/normalize.h

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

#ifndef AUGEVAL_NORMALIZE_H_
#define AUGEVAL_NORMALIZE_H_

#include <string>
#include <string_view>
#include <vector>

namespace augeval {

// Text normalization applied to references and hypotheses before scoring,
// so that rich-text output (case, punctuation, digits) is not penalized.
struct NormalizationConfig {
  bool lowercase = true;
  bool strip_punct = true;          // Unicode categories P and S
  bool collapse_whitespace = true;
  bool numbers_to_words = true;     // Dutch cardinals
  bool fold_e_acute = true;         // "é" -> "e"
};

// Applies, in order: lowercase, punctuation removal, digit-run expansion to
// Dutch words, é folding, whitespace collapse, trim. Idempotent.
//
// Punctuation is deleted rather than blanked so digit groups survive
// ("2.500" -> "2500" -> "tweeduizend vijfhonderd"). Apostrophes directly
// before a letter are kept: "z'n" and "'s ochtends" stay intact, a closing
// quote is stripped.
std::string normalize(std::string_view text, const NormalizationConfig& cfg = {});

// Splits normalized text on spaces. Empty input gives an empty vector.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace augeval

#endif  // AUGEVAL_NORMALIZE_H_
