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

#include "act/annotate/annotator.h"

#include "act/common/errors.h"

namespace act::annotate {

Json to_json(const PostAnnotations& a) {
  Json j = {{"category", to_string(a.category)},
            {"polarity", a.sentiment.polarity},
            {"anger_hits", a.sentiment.anger_hits}};
  if (a.geotag) {
    j["geotag"] = {{"place_name", a.geotag->place_name}, {"lon", a.geotag->lon},
                   {"lat", a.geotag->lat},               {"confidence", a.geotag->confidence},
                   {"population", a.geotag->population}, {"country", a.geotag->country}};
  }
  return j;
}

PostAnnotations post_annotations_from_json(const Json& j) {
  try {
    PostAnnotations a;
    const auto cat = category_from_string(j.at("category").get<std::string>());
    if (!cat) throw InvalidArgument("category", "unknown category");
    a.category = *cat;
    a.sentiment.polarity = j.at("polarity").get<double>();
    a.sentiment.anger_hits = j.at("anger_hits").get<int64_t>();
    a.sentiment.is_angry = a.sentiment.anger_hits >= 1;
    if (j.contains("geotag")) {
      const auto& g = j["geotag"];
      a.geotag = GeoTag{g.at("place_name").get<std::string>(), g.at("lon").get<double>(),
                        g.at("lat").get<double>(),             g.at("confidence").get<double>(),
                        g.at("population").get<int64_t>(),     g.at("country").get<std::string>()};
    }
    return a;
  } catch (const Json::exception& e) {
    throw InvalidArgument("annotations", e.what());
  }
}

void EventAnnotations::Add(const PostAnnotations& post, std::span<const PlaceCandidate> places,
                           double anger_threshold) {
  ++category_votes[static_cast<size_t>(post.category)];
  sentiment_tally.Add(post.sentiment);
  add_candidates(location_tally, places);

  category = category_from_votes(category_votes);
  sentiment = sentiment_tally.Summarize(anger_threshold);
  location = resolve_from_tally(location_tally);
}

Annotator::Annotator(std::shared_ptr<const Gazetteer> gazetteer, CategoryRules rules,
                     SentimentLexicon lexicon, double anger_threshold)
    : gazetteer_(std::move(gazetteer)),
      rules_(std::move(rules)),
      lexicon_(std::move(lexicon)),
      anger_threshold_(anger_threshold) {
  if (!gazetteer_) gazetteer_ = std::make_shared<Gazetteer>();
}

PostAnnotations Annotator::Annotate(const parse::Post& post) const {
  PostAnnotations a;
  a.geotag = geotag_text(post.tokens, *gazetteer_);
  a.category = categorize_post(post.tokens, rules_);
  a.sentiment = score_post(post.tokens, lexicon_);
  return a;
}

std::vector<PlaceCandidate> Annotator::Places(const parse::Post& post, const PostAnnotations& ann) const {
  return location_candidates(LocationSignal{ann.geotag, post.coords}, *gazetteer_);
}

}  // namespace act::annotate
