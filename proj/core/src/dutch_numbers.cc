// core/src/dutch_numbers.cc

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

#include "augeval/dutch_numbers.h"

#include <stdexcept>

namespace augeval {

namespace {

const char* const kOnes[20] = {
    "nul",     "een",      "twee",    "drie",     "vier",
    "vijf",    "zes",      "zeven",   "acht",     "negen",
    "tien",    "elf",      "twaalf",  "dertien",  "veertien",
    "vijftien", "zestien", "zeventien", "achttien", "negentien"};

const char* const kTens[10] = {
    "",       "",        "twintig", "dertig",   "veertig",
    "vijftig", "zestig", "zeventig", "tachtig", "negentig"};

std::string below_hundred(std::uint64_t n) {
  if (n < 20) return kOnes[n];
  std::uint64_t tens = n / 10, unit = n % 10;
  if (unit == 0) return kTens[tens];
  std::string word = kOnes[unit];
  // "twee" and "drie" take a trema before the "en" infix.
  word += (word.back() == 'e') ? "ën" : "en";
  word += kTens[tens];
  return word;
}

std::string below_thousand(std::uint64_t n) {
  if (n < 100) return below_hundred(n);
  std::uint64_t hundreds = n / 100, rest = n % 100;
  std::string word = (hundreds == 1) ? "" : kOnes[hundreds];
  word += "honderd";
  if (rest != 0) word += below_hundred(rest);
  return word;
}

}  // namespace

std::string dutch_cardinal(std::uint64_t n) {
  if (n > 999999) {
    throw std::out_of_range("dutch_cardinal: value out of range: " +
                            std::to_string(n));
  }
  if (n < 1000) return below_thousand(n);
  std::uint64_t thousands = n / 1000, rest = n % 1000;
  std::string word = (thousands == 1) ? "" : below_thousand(thousands);
  word += "duizend";
  if (rest != 0) {
    word += ' ';
    word += below_thousand(rest);
  }
  return word;
}

std::string expand_digit_run(std::string_view digits) {
  // Strip leading zeros but keep one digit for the all-zero case.
  std::size_t start = 0;
  while (start + 1 < digits.size() && digits[start] == '0') ++start;
  std::string_view trimmed = digits.substr(start);

  if (trimmed.size() <= 6) {
    std::uint64_t value = 0;
    for (char c : trimmed) value = value * 10 + static_cast<std::uint64_t>(c - '0');
    return dutch_cardinal(value);
  }
  // Too large for a proper cardinal; spell the digits individually.
  std::string out;
  for (std::size_t i = 0; i < trimmed.size(); ++i) {
    if (i != 0) out += ' ';
    out += kOnes[trimmed[i] - '0'];
  }
  return out;
}

}  // namespace augeval
