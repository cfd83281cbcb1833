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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace act::parse {

struct Entities {
  std::vector<std::string> hashtags;  // lowercase bodies, '#' removed
  std::vector<std::string> mentions;  // lowercase screen names, '@' removed
  std::vector<std::string> urls;      // as written
  bool is_retweet = false;
  std::optional<std::string> retweet_of;

  bool operator==(const Entities&) const = default;
};

// A '#' or '@' marker counts only at the start of the text or after a
// non-alphanumeric character, and must be followed by at least one body
// character (alphanumeric or '_'). Markers inside URLs are ignored.
// A text is a retweet when, after leading whitespace, it begins with
// "RT @name" (any case), optionally followed by a colon.
Entities extract_entities(std::string_view text);

}  // namespace act::parse
