// core/include/augeval/utf8.h

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

#ifndef AUGEVAL_UTF8_H_
#define AUGEVAL_UTF8_H_

#include <string>
#include <string_view>

namespace augeval {

// Decodes UTF-8; invalid byte sequences become U+FFFD, one per bad byte.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

// Unicode classification backed by the generated tables.
bool is_punct_or_symbol(char32_t cp);  // categories P* and S*
bool is_letter(char32_t cp);           // categories L*
bool is_space(char32_t cp);            // ASCII whitespace + common Unicode spaces
char32_t to_lower(char32_t cp);        // simple 1:1 lowercase mapping

}  // namespace augeval

#endif  // AUGEVAL_UTF8_H_
