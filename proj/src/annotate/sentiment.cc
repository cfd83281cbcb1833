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

#include "act/annotate/sentiment.h"

#include <algorithm>
#include <charconv>

#include "act/common/csv.h"
#include "act/common/errors.h"
#include "act/common/files.h"
#include "act/common/utf8.h"

namespace act::annotate {

SentimentLexicon SentimentLexicon::Load(const std::filesystem::path& lexicon_csv,
                                        const std::filesystem::path& anger_list) {
  SentimentLexicon lex;
  const auto lines = read_lines(lexicon_csv);
  for (size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const auto fields = split_csv_line(lines[i]);
    const std::string where = "sentiment_lexicon:" + std::to_string(i + 1);
    if (fields.size() != 2) throw InvalidArgument(where, "expected term,polarity");
    const std::string value = trim(fields[1]);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size() || v < -1.0 || v > 1.0) {
      throw InvalidArgument(where, "polarity must be a number in [-1, 1]");
    }
    lex.polarity[utf8::to_lower(trim(fields[0]))] = v;
  }
  for (const auto& term : read_term_list(anger_list)) lex.anger.insert(utf8::to_lower(term));
  return lex;
}

SentimentScore score_post(std::span<const std::string> tokens, const SentimentLexicon& lexicon) {
  SentimentScore s;
  double sum = 0.0;
  int64_t matched = 0;
  for (const auto& t : tokens) {
    if (auto it = lexicon.polarity.find(t); it != lexicon.polarity.end()) {
      sum += it->second;
      ++matched;
    }
    if (lexicon.anger.contains(t)) ++s.anger_hits;
  }
  if (matched > 0) s.polarity = std::clamp(sum / static_cast<double>(matched), -1.0, 1.0);
  s.is_angry = s.anger_hits >= 1;
  return s;
}

void SentimentTally::Add(const SentimentScore& s) {
  polarity_sum += s.polarity;
  if (s.is_angry) ++angry_members;
  ++members;
}

EventSentiment SentimentTally::Summarize(double anger_threshold) const {
  EventSentiment out;
  if (members == 0) return out;
  const double n = static_cast<double>(members);
  out.mean_polarity = std::clamp(polarity_sum / n, -1.0, 1.0);
  out.angry_fraction = static_cast<double>(angry_members) / n;
  out.flagged_angry = out.angry_fraction >= anger_threshold;
  return out;
}

EventSentiment aggregate_event_sentiment(std::span<const SentimentScore> members, double anger_threshold) {
  SentimentTally tally;
  for (const auto& s : members) tally.Add(s);
  return tally.Summarize(anger_threshold);
}

}  // namespace act::annotate
