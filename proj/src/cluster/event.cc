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

#include "act/cluster/event.h"

#include "act/common/errors.h"

namespace act::cluster {

const std::string& headline(const Event& e) {
  static const std::string kEmpty;
  const std::string* best = &kEmpty;
  const TextEntry* best_entry = nullptr;
  for (const auto& [text, entry] : e.unique_texts) {
    if (!best_entry || entry.count > best_entry->count ||
        (entry.count == best_entry->count && entry.representative_time < best_entry->representative_time)) {
      best = &text;
      best_entry = &entry;
    }
  }
  return *best;
}

namespace {

Json tally_to_json(const annotate::EventAnnotations& a) {
  Json places = Json::object();
  for (const auto& [key, t] : a.location_tally) {
    places[key] = {{"name", t.name},
                   {"lon", t.lon},
                   {"lat", t.lat},
                   {"population", t.population},
                   {"count", t.count},
                   {"total_confidence", t.total_confidence}};
  }
  Json j = {{"category_votes", a.category_votes},
            {"polarity_sum", a.sentiment_tally.polarity_sum},
            {"angry_members", a.sentiment_tally.angry_members},
            {"members", a.sentiment_tally.members},
            {"places", places},
            {"category", annotate::to_string(a.category)},
            {"mean_polarity", a.sentiment.mean_polarity},
            {"angry_fraction", a.sentiment.angry_fraction},
            {"flagged_angry", a.sentiment.flagged_angry}};
  if (a.location) {
    j["location"] = {{"lon", a.location->lon},
                     {"lat", a.location->lat},
                     {"place_name", a.location->place_name},
                     {"confidence", a.location->confidence}};
  }
  return j;
}

annotate::EventAnnotations tally_from_json(const Json& j) {
  annotate::EventAnnotations a;
  a.category_votes = j.at("category_votes").get<annotate::CategoryVotes>();
  a.sentiment_tally.polarity_sum = j.at("polarity_sum").get<double>();
  a.sentiment_tally.angry_members = j.at("angry_members").get<int64_t>();
  a.sentiment_tally.members = j.at("members").get<int64_t>();
  for (const auto& [key, t] : j.at("places").items()) {
    a.location_tally[key] = annotate::PlaceTally{
        t.at("name").get<std::string>(),  t.at("lon").get<double>(),
        t.at("lat").get<double>(),        t.at("population").get<int64_t>(),
        t.at("count").get<int64_t>(),     t.at("total_confidence").get<double>()};
  }
  const auto cat = annotate::category_from_string(j.at("category").get<std::string>());
  if (!cat) throw InvalidArgument("category", "unknown category");
  a.category = *cat;
  a.sentiment.mean_polarity = j.at("mean_polarity").get<double>();
  a.sentiment.angry_fraction = j.at("angry_fraction").get<double>();
  a.sentiment.flagged_angry = j.at("flagged_angry").get<bool>();
  if (j.contains("location")) {
    const auto& l = j["location"];
    a.location = annotate::EventLocation{l.at("lon").get<double>(), l.at("lat").get<double>(),
                                         l.at("place_name").get<std::string>(),
                                         l.at("confidence").get<double>()};
  }
  return a;
}

}  // namespace

Json to_json(const Event& e) {
  Json texts = Json::object();
  for (const auto& [text, entry] : e.unique_texts) {
    texts[text] = {{"id", entry.representative_id},
                   {"time", format_timestamp(entry.representative_time)},
                   {"count", entry.count}};
  }
  return {{"id", e.id},
          {"member_ids", e.member_ids},
          {"unique_texts", texts},
          {"centroid", e.centroid},
          {"centroid_sum", e.centroid_sum},
          {"centroid_norm", e.centroid_norm},
          {"first_seen", format_timestamp(e.first_seen)},
          {"last_seen", format_timestamp(e.last_seen)},
          {"term_counts", e.term_counts},
          {"annotations", tally_to_json(e.annotations)},
          {"revision", e.revision}};
}

Event event_from_json(const Json& j) {
  try {
    Event e;
    e.id = j.at("id").get<std::string>();
    e.member_ids = j.at("member_ids").get<std::vector<std::string>>();
    for (const auto& [text, entry] : j.at("unique_texts").items()) {
      e.unique_texts[text] = TextEntry{entry.at("id").get<std::string>(),
                                       parse_timestamp(entry.at("time").get<std::string>()),
                                       entry.at("count").get<int64_t>()};
    }
    e.centroid = j.at("centroid").get<TermVector>();
    e.centroid_sum = j.at("centroid_sum").get<TermVector>();
    e.centroid_norm = j.at("centroid_norm").get<double>();
    e.first_seen = parse_timestamp(j.at("first_seen").get<std::string>(), "first_seen");
    e.last_seen = parse_timestamp(j.at("last_seen").get<std::string>(), "last_seen");
    e.term_counts = j.at("term_counts").get<std::map<std::string, int64_t, std::less<>>>();
    e.annotations = tally_from_json(j.at("annotations"));
    e.revision = j.at("revision").get<uint64_t>();
    return e;
  } catch (const Json::exception& ex) {
    throw InvalidArgument("event", ex.what());
  }
}

}  // namespace act::cluster
