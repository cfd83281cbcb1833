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

#include <string>
#include <string_view>
#include <vector>

#include "act/parse/stopwords.h"

namespace act::parse {

// Replaces every URL (a maximal run of non-space characters starting with
// "http://" or "https://") with a single space.
std::string strip_urls(std::string_view text);

// Lowercased, URL-stripped, whitespace-collapsed copy of `text`.
std::string normalize_text(std::string_view text);

// Splits on non-alphanumeric code points after URL removal, lowercases, and
// drops terms shorter than two code points and stopwords. Hashtag and
// mention bodies survive as ordinary terms.
std::vector<std::string> tokenize(std::string_view text, const StopwordSet& stopwords);

inline std::vector<std::string> tokenize(std::string_view text) {
  return tokenize(text, default_stopwords());
}

// Same split without stopword or length filtering; used for whole-token
// keyword matching.
std::vector<std::string> split_terms(std::string_view text);

}  // namespace act::parse
