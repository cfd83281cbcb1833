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

#include "act/parse/tokenizer.h"

#include "act/common/utf8.h"

namespace act::parse {

namespace {

bool starts_with_ci(std::string_view s, size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    char c = s[pos + i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
    if (c != prefix[i]) return false;
  }
  return true;
}

bool is_ascii_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

template <typename Fn>
void for_each_term(std::string_view text, Fn&& emit) {
  const std::string stripped = strip_urls(text);
  std::string_view s = stripped;
  std::string cur;
  size_t cur_len = 0;
  size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = utf8::next(s, pos);
    if (utf8::is_alnum(cp)) {
      utf8::append(cur, utf8::to_lower(cp));
      ++cur_len;
    } else if (!cur.empty()) {
      emit(std::move(cur), cur_len);
      cur.clear();
      cur_len = 0;
    }
  }
  if (!cur.empty()) emit(std::move(cur), cur_len);
}

}  // namespace

std::string strip_urls(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (starts_with_ci(text, i, "http://") || starts_with_ci(text, i, "https://")) {
      while (i < text.size() && !is_ascii_space(text[i])) ++i;
      out.push_back(' ');
      continue;
    }
    out.push_back(text[i++]);
  }
  return out;
}

std::string normalize_text(std::string_view text) {
  const std::string lowered = utf8::to_lower(strip_urls(text));
  std::string_view s = lowered;
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  size_t pos = 0;
  while (pos < s.size()) {
    const size_t start = pos;
    const char32_t cp = utf8::next(s, pos);
    if (utf8::is_space(cp)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.append(s.substr(start, pos - start));
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text, const StopwordSet& stopwords) {
  std::vector<std::string> tokens;
  for_each_term(text, [&](std::string&& term, size_t len) {
    if (len < 2 || stopwords.contains(term)) return;
    tokens.push_back(std::move(term));
  });
  return tokens;
}

std::vector<std::string> split_terms(std::string_view text) {
  std::vector<std::string> terms;
  for_each_term(text, [&](std::string&& term, size_t) { terms.push_back(std::move(term)); });
  return terms;
}

}  // namespace act::parse
