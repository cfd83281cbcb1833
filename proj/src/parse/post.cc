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

#include "act/parse/post.h"

#include "act/common/errors.h"
#include "act/common/utf8.h"
#include "act/parse/entities.h"
#include "act/parse/tokenizer.h"

namespace act::parse {

Json to_json(const Post& p) {
  Json j = {
      {"id", p.id},
      {"created_at", format_timestamp(p.created_at)},
      {"author", p.author},
      {"text", p.text},
      {"norm_text", p.norm_text},
      {"tokens", p.tokens},
      {"hashtags", p.hashtags},
      {"mentions", p.mentions},
      {"urls", p.urls},
      {"is_retweet", p.is_retweet},
      {"is_agency", p.is_agency},
  };
  if (p.retweet_of) j["retweet_of"] = *p.retweet_of;
  if (p.coords) j["coordinates"] = {p.coords->lon, p.coords->lat};
  return j;
}

Post post_from_json(const Json& j) {
  try {
    Post p;
    p.id = j.at("id").get<std::string>();
    p.created_at = parse_timestamp(j.at("created_at").get<std::string>(), "created_at");
    p.author = j.at("author").get<std::string>();
    p.text = j.at("text").get<std::string>();
    p.norm_text = j.at("norm_text").get<std::string>();
    p.tokens = j.at("tokens").get<std::vector<std::string>>();
    p.hashtags = j.at("hashtags").get<std::vector<std::string>>();
    p.mentions = j.at("mentions").get<std::vector<std::string>>();
    p.urls = j.at("urls").get<std::vector<std::string>>();
    p.is_retweet = j.at("is_retweet").get<bool>();
    p.is_agency = j.at("is_agency").get<bool>();
    if (j.contains("retweet_of")) p.retweet_of = j["retweet_of"].get<std::string>();
    if (j.contains("coordinates")) {
      const auto& c = j["coordinates"];
      p.coords = GeoPoint{c.at(0).get<double>(), c.at(1).get<double>()};
    }
    return p;
  } catch (const Json::exception& e) {
    throw InvalidArgument("post", e.what());
  }
}

Parser::Parser(StopwordSet stopwords, std::set<std::string, std::less<>> agency_accounts)
    : stopwords_(std::move(stopwords)), agency_accounts_(std::move(agency_accounts)) {}

Post Parser::parse(const ingest::RawPost& raw) const {
  Post p;
  p.id = raw.id;
  p.created_at = raw.created_at;
  p.author = raw.author;
  p.text = raw.text;
  p.norm_text = normalize_text(raw.text);
  p.tokens = tokenize(raw.text, stopwords_);
  Entities e = extract_entities(raw.text);
  p.hashtags = std::move(e.hashtags);
  p.mentions = std::move(e.mentions);
  p.urls = std::move(e.urls);
  p.is_retweet = e.is_retweet;
  p.retweet_of = std::move(e.retweet_of);
  p.coords = raw.coords;
  p.is_agency = agency_accounts_.contains(utf8::to_lower(raw.author));
  return p;
}

}  // namespace act::parse
