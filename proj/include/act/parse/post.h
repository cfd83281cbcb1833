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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "act/common/files.h"
#include "act/common/geo.h"
#include "act/common/time.h"
#include "act/ingest/raw_post.h"
#include "act/parse/stopwords.h"

namespace act::parse {

struct Post {
  std::string id;
  Timestamp created_at;
  std::string author;
  std::string text;
  std::string norm_text;
  std::vector<std::string> tokens;
  std::vector<std::string> hashtags;
  std::vector<std::string> mentions;
  std::vector<std::string> urls;
  bool is_retweet = false;
  std::optional<std::string> retweet_of;
  std::optional<GeoPoint> coords;
  bool is_agency = false;

  bool operator==(const Post&) const = default;
};

Json to_json(const Post& post);
Post post_from_json(const Json& j);

// Turns raw records into posts. `agency_accounts` holds lowercase screen
// names; membership is tested case-insensitively.
class Parser {
 public:
  Parser(StopwordSet stopwords, std::set<std::string, std::less<>> agency_accounts);

  Post parse(const ingest::RawPost& raw) const;

  const StopwordSet& stopwords() const { return stopwords_; }

 private:
  StopwordSet stopwords_;
  std::set<std::string, std::less<>> agency_accounts_;
};

}  // namespace act::parse
