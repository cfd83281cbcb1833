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

#include "act/parse/stopwords.h"

#include "act/common/files.h"
#include "act/common/utf8.h"

namespace act::parse {

const StopwordSet& default_stopwords() {
  static const StopwordSet kWords = {
      "a",        "about",      "above",  "after",     "again",   "against", "all",
      "am",       "amp",        "an",     "and",       "any",     "are",     "as",
      "at",       "be",         "because", "been",     "before",  "being",   "below",
      "between",  "both",       "but",    "by",        "can",     "could",   "did",
      "do",       "does",       "doing",  "dont",      "during",  "each",    "few",
      "for",      "from",       "further", "had",      "has",     "have",    "having",
      "he",       "her",        "here",   "hers",      "herself", "him",     "himself",
      "his",      "how",        "i",      "if",        "im",      "in",      "into",
      "is",       "it",         "its",    "itself",    "just",    "me",      "more",
      "most",     "my",         "myself", "no",        "nor",     "not",     "now",
      "of",       "off",        "on",     "once",      "only",    "or",      "other",
      "our",      "ours",       "ourselves", "out",    "own",     "rt",      "same",
      "she",      "should",     "so",     "some",      "such",    "than",    "that",
      "the",      "their",      "theirs", "them",      "themselves", "then", "there",
      "these",    "they",       "this",   "those",     "through", "to",      "too",
      "until",    "up",         "us",     "very",      "via",     "was",     "we",
      "were",     "what",       "when",   "where",     "which",   "while",   "who",
      "whom",     "why",        "will",   "with",      "would",   "you",     "your",
      "yours",    "yourself",   "yourselves",
  };
  return kWords;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  StopwordSet words;
  for (const auto& term : read_term_list(path)) words.insert(utf8::to_lower(term));
  return words;
}

}  // namespace act::parse
