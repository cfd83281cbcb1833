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

#include <memory>
#include <optional>
#include <vector>

#include "act/annotate/category.h"
#include "act/annotate/gazetteer.h"
#include "act/annotate/geotag.h"
#include "act/annotate/sentiment.h"
#include "act/parse/post.h"

namespace act::annotate {

struct PostAnnotations {
  std::optional<GeoTag> geotag;
  Category category = Category::kOther;
  SentimentScore sentiment;

  bool operator==(const PostAnnotations&) const = default;
};

Json to_json(const PostAnnotations& a);
PostAnnotations post_annotations_from_json(const Json& j);

// Running per-event aggregates. Derived fields are refreshed on every Add
// and always equal a from-scratch pass over the same members.
struct EventAnnotations {
  CategoryVotes category_votes{};
  SentimentTally sentiment_tally;
  LocationTally location_tally;

  Category category = Category::kOther;
  EventSentiment sentiment;
  std::optional<EventLocation> location;

  void Add(const PostAnnotations& post, std::span<const PlaceCandidate> places, double anger_threshold);

  bool operator==(const EventAnnotations&) const = default;
};

// Read-only resources shared by the pipeline and query handlers.
class Annotator {
 public:
  Annotator(std::shared_ptr<const Gazetteer> gazetteer, CategoryRules rules, SentimentLexicon lexicon,
            double anger_threshold = kDefaultAngerThreshold);

  PostAnnotations Annotate(const parse::Post& post) const;

  // Place votes a post contributes to its event.
  std::vector<PlaceCandidate> Places(const parse::Post& post, const PostAnnotations& ann) const;

  const Gazetteer& gazetteer() const { return *gazetteer_; }
  const CategoryRules& category_rules() const { return rules_; }
  const SentimentLexicon& lexicon() const { return lexicon_; }
  double anger_threshold() const { return anger_threshold_; }

 private:
  std::shared_ptr<const Gazetteer> gazetteer_;
  CategoryRules rules_;
  SentimentLexicon lexicon_;
  double anger_threshold_;
};

}  // namespace act::annotate
