// Copyright 2026 The ACT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace act::utf8 {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes the code point starting at `pos` and advances `pos` past it.
// Malformed sequences decode to U+FFFD and consume one byte.
char32_t next(std::string_view s, size_t& pos);

void append(std::string& out, char32_t cp);

// Letters and digits across the scripts a crisis feed is likely to carry.
// Punctuation, symbols and emoji are not alphanumeric.
bool is_alnum(char32_t cp);

// Simple one-to-one case mapping for Latin, Greek, Cyrillic and fullwidth
// forms; other code points are returned unchanged.
char32_t to_lower(char32_t cp);

std::string to_lower(std::string_view s);

size_t length(std::string_view s);

inline bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v' ||
         cp == 0xA0 || cp == 0x3000 || (cp >= 0x2000 && cp <= 0x200B) || cp == 0x2028 ||
         cp == 0x2029;
}

}  // namespace act::utf8
