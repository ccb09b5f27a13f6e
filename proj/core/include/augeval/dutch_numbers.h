// core/include/augeval/dutch_numbers.h

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

#ifndef AUGEVAL_DUTCH_NUMBERS_H_
#define AUGEVAL_DUTCH_NUMBERS_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace augeval {

// Dutch cardinal spelling for 0..999999 following Taalunie orthography:
// compounds are written as one word up to and including "duizend", a space
// separates "duizend" from a remainder, and 21..99 use unit + en/ën + tens
// ("eenentwintig", "tweeëntwintig"). Throws std::out_of_range above 999999.
std::string dutch_cardinal(std::uint64_t n);

// Expands a run of ASCII digits to words. Leading zeros are dropped
// ("007" -> "zeven"); runs above 999999 degrade to digit-by-digit spelling
// so the output never contains digits.
std::string expand_digit_run(std::string_view digits);

}  // namespace augeval

#endif  // AUGEVAL_DUTCH_NUMBERS_H_
