// core/include/augeval/unicode_tables.h

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

#ifndef AUGEVAL_UNICODE_TABLES_H_
#define AUGEVAL_UNICODE_TABLES_H_

#include <cstddef>

namespace augeval {

struct CodepointRange {
  char32_t first;
  char32_t last;  // inclusive
};

struct CasePair {
  char32_t upper;
  char32_t lower;
};

// Sorted, non-overlapping ranges; see src/unicode_tables.cc (generated).
extern const CodepointRange kPunctSymbolRanges[];  // categories P* and S*
extern const std::size_t kPunctSymbolRangesCount;
extern const CodepointRange kLetterRanges[];  // categories L*
extern const std::size_t kLetterRangesCount;
extern const CasePair kLowerPairs[];  // simple 1:1 lowercase mapping
extern const std::size_t kLowerPairCount;

}  // namespace augeval

#endif  // AUGEVAL_UNICODE_TABLES_H_
