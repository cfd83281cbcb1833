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

#include "act/parse/noise.h"

#include <algorithm>

#include "act/common/errors.h"
#include "act/common/utf8.h"
#include "act/parse/tokenizer.h"

namespace act::parse {

namespace {

bool is_ascii_alnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::vector<std::string> normalized_phrases(const Json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) throw InvalidArgument(key, "expected an array of phrases");
  for (const auto& item : j[key]) {
    if (!item.is_string()) throw InvalidArgument(key, "phrases must be strings");
    std::string phrase = normalize_text(item.get<std::string>());
    if (!phrase.empty()) out.push_back(std::move(phrase));
  }
  return out;
}

bool any_phrase(std::string_view text, const std::vector<std::string>& phrases) {
  return std::any_of(phrases.begin(), phrases.end(),
                     [&](const std::string& p) { return contains_phrase(text, p); });
}

}  // namespace

std::string_view to_string(NoiseReason reason) {
  switch (reason) {
    case NoiseReason::kNone: return "none";
    case NoiseReason::kEmpty: return "empty";
    case NoiseReason::kSpam: return "spam";
    case NoiseReason::kJoke: return "joke";
    case NoiseReason::kSong: return "song";
    case NoiseReason::kDuplicateFlood: return "duplicate_flood";
  }
  return "none";
}

NoiseRules NoiseRules::Defaults() {
  NoiseRules r;
  r.spam = {"click here to win", "free followers",   "buy now",       "limited time offer",
            "earn money fast",   "work from home",   "follow back",   "cheap pills",
            "promo code",        "dm for promotion"};
  r.joke = {"my mixtape is fire", "knock knock",       "walks into a bar", "lol jk",
            "fire in the hole",   "hot mess express"};
  r.song = {"we didn't start the fire", "light my fire",        "set fire to the rain",
            "burning down the house",   "ring of fire",         "girl on fire",
            "now playing",              "sing along"};
  return r;
}

NoiseRules NoiseRules::FromJson(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("noise_rules", "expected a JSON object");
  NoiseRules r;
  r.spam = normalized_phrases(j, "spam");
  r.joke = normalized_phrases(j, "joke");
  r.song = normalized_phrases(j, "song");
  if (j.contains("max_urls")) {
    if (!j["max_urls"].is_number_integer() || j["max_urls"].get<int>() < 0) {
      throw InvalidArgument("max_urls", "expected a non-negative integer");
    }
    r.max_urls = j["max_urls"].get<int>();
  }
  if (j.contains("flood_window_secs")) {
    if (!j["flood_window_secs"].is_number_integer() || j["flood_window_secs"].get<int64_t>() < 0) {
      throw InvalidArgument("flood_window_secs", "expected a non-negative integer");
    }
    r.flood_window = Seconds{j["flood_window_secs"].get<int64_t>()};
  }
  return r;
}

NoiseRules NoiseRules::Load(const std::filesystem::path& path) {
  return FromJson(read_json_file(path));
}

Json NoiseRules::ToJson() const {
  return {{"spam", spam},
          {"joke", joke},
          {"song", song},
          {"max_urls", max_urls},
          {"flood_window_secs", flood_window.count()}};
}

bool contains_phrase(std::string_view haystack, std::string_view phrase) {
  if (phrase.empty()) return false;
  size_t pos = haystack.find(phrase);
  while (pos != std::string_view::npos) {
    const bool left_ok = pos == 0 || !is_ascii_alnum(phrase.front()) || !is_ascii_alnum(haystack[pos - 1]);
    const size_t end = pos + phrase.size();
    const bool right_ok =
        end == haystack.size() || !is_ascii_alnum(phrase.back()) || !is_ascii_alnum(haystack[end]);
    if (left_ok && right_ok) return true;
    pos = haystack.find(phrase, pos + 1);
  }
  return false;
}

NoiseVerdict classify_noise(const Post& post, const NoiseRules& rules, const SeenSet& seen) {
  if (post.tokens.empty()) return NoiseVerdict::Drop(NoiseReason::kEmpty);
  if (static_cast<int>(post.urls.size()) > rules.max_urls || any_phrase(post.norm_text, rules.spam)) {
    return NoiseVerdict::Drop(NoiseReason::kSpam);
  }
  if (any_phrase(post.norm_text, rules.joke)) return NoiseVerdict::Drop(NoiseReason::kJoke);
  if (any_phrase(post.norm_text, rules.song)) return NoiseVerdict::Drop(NoiseReason::kSong);

  auto it = seen.find(std::make_pair(utf8::to_lower(post.author), post.norm_text));
  if (it != seen.end()) {
    const auto gap = post.created_at > it->second ? post.created_at - it->second
                                                  : it->second - post.created_at;
    if (gap <= rules.flood_window) return NoiseVerdict::Drop(NoiseReason::kDuplicateFlood);
  }
  return NoiseVerdict::Keep();
}

NoiseVerdict NoiseFilter::Classify(const Post& post) {
  const NoiseVerdict verdict = classify_noise(post, rules_, seen_);
  if (verdict.keep || verdict.reason == NoiseReason::kDuplicateFlood) {
    auto key = std::make_pair(utf8::to_lower(post.author), post.norm_text);
    auto [it, inserted] = seen_.try_emplace(std::move(key), post.created_at);
    if (!inserted) it->second = std::max(it->second, post.created_at);
    if (++inserts_since_prune_ >= 4096) Prune(post.created_at);
  }
  return verdict;
}

void NoiseFilter::Prune(Timestamp now) {
  inserts_since_prune_ = 0;
  // Entries older than two windows cannot match a post that is at most one
  // window out of order.
  const Timestamp horizon = now - 2 * rules_.flood_window;
  std::erase_if(seen_, [&](const auto& kv) { return kv.second < horizon; });
}

}  // namespace act::parse
