// core/src/normalize.cc

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

#include "augeval/normalize.h"

#include "augeval/dutch_numbers.h"
#include "augeval/utf8.h"

namespace augeval {

namespace {

constexpr char32_t kApostrophe = U'\'';
constexpr char32_t kRightSingleQuote = 0x2019;
constexpr char32_t kEAcute = 0x00E9;

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

std::u32string strip_punct(const std::u32string& in) {
  std::u32string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    char32_t cp = in[i];
    if (!is_punct_or_symbol(cp)) {
      out.push_back(cp);
      continue;
    }
    // Keep apostrophes that introduce or continue a word ("z'n", "'s"),
    // folding the typographic variant to ASCII. A quote that is not
    // followed by a letter is dropped with the rest of the punctuation.
    if ((cp == kApostrophe || cp == kRightSingleQuote) &&
        i + 1 < in.size() && is_letter(in[i + 1])) {
      out.push_back(kApostrophe);
    }
  }
  return out;
}

std::u32string expand_numbers(const std::u32string& in) {
  std::u32string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    if (!is_ascii_digit(in[i])) {
      out.push_back(in[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < in.size() && is_ascii_digit(in[j])) ++j;
    std::string run;
    for (std::size_t k = i; k < j; ++k) run.push_back(static_cast<char>(in[k]));
    // Space-separate the expansion from any neighboring text ("16khz" ->
    // "zestien khz"); the collapse pass removes doubled spaces.
    if (!out.empty() && !is_space(out.back())) out.push_back(U' ');
    std::u32string words = decode_utf8(expand_digit_run(run));
    out.append(words);
    if (j < in.size() && !is_space(in[j])) out.push_back(U' ');
    i = j;
  }
  return out;
}

std::u32string collapse_spaces(const std::u32string& in) {
  std::u32string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (char32_t cp : in) {
    if (is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  return out;
}

}  // namespace

std::string normalize(std::string_view text, const NormalizationConfig& cfg) {
  std::u32string s = decode_utf8(text);

  if (cfg.lowercase) {
    for (char32_t& cp : s) cp = to_lower(cp);
  }
  if (cfg.strip_punct) s = strip_punct(s);
  if (cfg.numbers_to_words) s = expand_numbers(s);
  if (cfg.fold_e_acute) {
    for (char32_t& cp : s) {
      if (cp == kEAcute) cp = U'e';
    }
  }
  if (cfg.collapse_whitespace) s = collapse_spaces(s);

  return encode_utf8(s);
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace augeval
