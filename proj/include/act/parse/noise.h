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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "act/common/files.h"
#include "act/common/time.h"
#include "act/parse/post.h"

namespace act::parse {

enum class NoiseReason { kNone, kEmpty, kSpam, kJoke, kSong, kDuplicateFlood };

std::string_view to_string(NoiseReason reason);

struct NoiseVerdict {
  bool keep = true;
  NoiseReason reason = NoiseReason::kNone;

  static NoiseVerdict Keep() { return {true, NoiseReason::kNone}; }
  static NoiseVerdict Drop(NoiseReason r) { return {false, r}; }
  bool operator==(const NoiseVerdict&) const = default;
};

// Phrase lists are matched against Post::norm_text on word boundaries.
// There is deliberately no profanity list: expletives never cause a drop.
struct NoiseRules {
  std::vector<std::string> spam;
  std::vector<std::string> joke;
  std::vector<std::string> song;
  int max_urls = 3;
  Seconds flood_window{600};

  // Same content as data/rules/noise.json.
  static NoiseRules Defaults();
  static NoiseRules FromJson(const Json& j);
  static NoiseRules Load(const std::filesystem::path& path);
  Json ToJson() const;
};

// Last sighting per (lowercase author, norm_text).
using SeenSet = std::map<std::pair<std::string, std::string>, Timestamp, std::less<>>;

// True when `phrase` occurs in `haystack` with no ASCII alphanumeric
// character directly before or after it.
bool contains_phrase(std::string_view haystack, std::string_view phrase);

// Pure verdict given the seen-set state at call time. Checks run in the
// order empty, spam, joke, song, duplicate_flood.
NoiseVerdict classify_noise(const Post& post, const NoiseRules& rules, const SeenSet& seen);

// Owns the duplicate-flood seen-set for a single pipeline thread.
class NoiseFilter {
 public:
  explicit NoiseFilter(NoiseRules rules) : rules_(std::move(rules)) {}

  // Classifies, then records the sighting for posts that reached the
  // flood check.
  NoiseVerdict Classify(const Post& post);

  const NoiseRules& rules() const { return rules_; }
  const SeenSet& seen() const { return seen_; }

 private:
  void Prune(Timestamp now);

  NoiseRules rules_;
  SeenSet seen_;
  size_t inserts_since_prune_ = 0;
};

}  // namespace act::parse
