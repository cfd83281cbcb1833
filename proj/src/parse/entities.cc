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

#include "act/parse/entities.h"

#include "act/common/utf8.h"
#include "act/parse/tokenizer.h"

namespace act::parse {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

// Reads an entity body starting at `pos`; returns its lowercase form and
// advances `pos` past it.
std::string read_body(std::string_view s, size_t& pos) {
  std::string body;
  while (pos < s.size()) {
    size_t next = pos;
    const char32_t cp = utf8::next(s, next);
    if (!utf8::is_alnum(cp) && cp != '_') break;
    utf8::append(body, utf8::to_lower(cp));
    pos = next;
  }
  return body;
}

std::vector<std::string> find_urls(std::string_view text) {
  std::vector<std::string> urls;
  size_t i = 0;
  while (i < text.size()) {
    const bool http = text.size() - i >= 7 && utf8::to_lower(text.substr(i, 7)) == "http://";
    const bool https = text.size() - i >= 8 && utf8::to_lower(text.substr(i, 8)) == "https://";
    if (http || https) {
      const size_t start = i;
      while (i < text.size() && !is_space(text[i])) ++i;
      urls.emplace_back(text.substr(start, i - start));
      continue;
    }
    ++i;
  }
  return urls;
}

}  // namespace

Entities extract_entities(std::string_view text) {
  Entities out;
  out.urls = find_urls(text);

  const std::string stripped = strip_urls(text);
  std::string_view s = stripped;
  char32_t prev = ' ';
  size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = utf8::next(s, pos);
    if ((cp == '#' || cp == '@') && !utf8::is_alnum(prev) && prev != '_') {
      size_t body_pos = pos;
      std::string body = read_body(s, body_pos);
      if (!body.empty()) {
        (cp == '#' ? out.hashtags : out.mentions).push_back(std::move(body));
        pos = body_pos;
        prev = 'a';
        continue;
      }
    }
    prev = cp;
  }

  size_t lead = 0;
  while (lead < text.size() && is_space(text[lead])) ++lead;
  if (text.size() - lead >= 4 && (text[lead] == 'R' || text[lead] == 'r') &&
      (text[lead + 1] == 'T' || text[lead + 1] == 't') && text[lead + 2] == ' ' &&
      text[lead + 3] == '@') {
    size_t body_pos = lead + 4;
    std::string body = read_body(text, body_pos);
    if (!body.empty()) {
      out.is_retweet = true;
      out.retweet_of = std::move(body);
    }
  }
  return out;
}

}  // namespace act::parse
