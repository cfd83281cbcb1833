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
#include <span>
#include <string>
#include <vector>

#include "act/annotate/category.h"
#include "act/cluster/event.h"
#include "act/media/media_index.h"

namespace act::media {

struct MediaWeights {
  double content = 0.5;
  double geo = 0.3;
  double time = 0.2;
  double min_score = 0.1;
  double geo_scale_km = 25.0;
  double time_scale_hours = 12.0;
  Seconds window_pad = std::chrono::hours(12);
  size_t query_terms = 5;  // top trending terms of the event
};

struct MediaQuery {
  std::set<std::string> terms;  // event top terms plus its category keywords
  std::optional<GeoPoint> center;
  Timestamp from;
  Timestamp to;
  Timestamp span_first;
  Timestamp span_last;
};

MediaQuery build_media_query(const cluster::Event& e, const annotate::CategoryRules& rules,
                             const MediaWeights& w = {});

// |A ∩ B| / |A ∪ B| over distinct caption tokens and query terms; 0 when
// both are empty.
double jaccard(std::span<const std::string> caption_tokens, const std::set<std::string>& terms);

// Hours from `t` to the nearest end of [first, last]; 0 inside.
double hours_to_span(Timestamp t, Timestamp first, Timestamp last);

// content * jaccard + geo * exp(-km / geo_scale) (0 without both
// positions) + time * exp(-hours_to_span / time_scale).
double media_score(const MediaItem& item, const MediaQuery& q, const MediaWeights& w = {});

struct RankedMedia {
  MediaItem item;
  std::optional<double> score;  // absent for media embedded in member posts

  bool operator==(const RankedMedia&) const = default;
};

// Embedded images from `members` (deduplicated by id, member order) come
// first, then index items inside the query window scoring at least
// min_score, best first with older items winning ties. At most `k` results.
std::vector<RankedMedia> find_media(const cluster::Event& e, std::span<const parse::Post* const> members,
                                    const MediaIndex& index, const annotate::CategoryRules& rules,
                                    size_t k = 12, const MediaWeights& w = {});

}  // namespace act::media
