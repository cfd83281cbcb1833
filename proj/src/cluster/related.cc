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

#include "act/cluster/related.h"

#include <algorithm>
#include <cmath>

namespace act::cluster {

double span_gap_hours(const Event& a, const Event& b) {
  if (a.last_seen < b.first_seen) return hours_between(a.last_seen, b.first_seen);
  if (b.last_seen < a.first_seen) return hours_between(b.last_seen, a.first_seen);
  return 0.0;
}

double related_score(const Event& e, const Event& f, const RelatedWeights& w) {
  double geo = 0.0;
  if (e.location() && f.location()) {
    geo = std::exp(-haversine_km(e.location()->point(), f.location()->point()) / w.geo_scale_km);
  }
  const double time = std::exp(-span_gap_hours(e, f) / w.time_scale_hours);
  const double cat = e.category() == f.category() ? 1.0 : 0.0;
  return w.geo * geo + w.time * time + w.category * cat;
}

std::vector<RelatedEvent> related_events(const Event& e, std::span<const Event* const> all, size_t k,
                                         const RelatedWeights& w) {
  std::vector<RelatedEvent> scored;
  for (const Event* f : all) {
    if (f->id == e.id) continue;
    scored.push_back({f, related_score(e, *f, w)});
  }
  auto better = [](const RelatedEvent& a, const RelatedEvent& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.event->last_seen != b.event->last_seen) return a.event->last_seen > b.event->last_seen;
    return a.event->id < b.event->id;
  };
  if (scored.size() > k) {
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k), scored.end(), better);
    scored.resize(k);
  } else {
    std::sort(scored.begin(), scored.end(), better);
  }
  return scored;
}

}  // namespace act::cluster
