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

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>

namespace act::annotate {

struct SentimentLexicon {
  std::map<std::string, double, std::less<>> polarity;  // term -> [-1, 1]
  std::set<std::string, std::less<>> anger;             // expletives and anger terms

  // Lexicon CSV `term,polarity` with a header row, anger list one term per
  // line. Throws IoError or InvalidArgument.
  static SentimentLexicon Load(const std::filesystem::path& lexicon_csv,
                               const std::filesystem::path& anger_list);
};

struct SentimentScore {
  double polarity = 0.0;
  int64_t anger_hits = 0;
  bool is_angry = false;

  bool operator==(const SentimentScore&) const = default;
};

// Mean polarity over matched tokens (0 without matches); every token in
// the anger list is one hit.
SentimentScore score_post(std::span<const std::string> tokens, const SentimentLexicon& lexicon);

inline constexpr double kDefaultAngerThreshold = 0.2;

struct EventSentiment {
  double mean_polarity = 0.0;
  double angry_fraction = 0.0;
  bool flagged_angry = false;

  bool operator==(const EventSentiment&) const = default;
};

struct SentimentTally {
  double polarity_sum = 0.0;
  int64_t angry_members = 0;
  int64_t members = 0;

  void Add(const SentimentScore& s);
  EventSentiment Summarize(double anger_threshold) const;

  bool operator==(const SentimentTally&) const = default;
};

EventSentiment aggregate_event_sentiment(std::span<const SentimentScore> members,
                                         double anger_threshold = kDefaultAngerThreshold);

}  // namespace act::annotate
