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

#include "act/store/query.h"

#include <algorithm>

namespace act::store {

bool event_matches(const cluster::Event& e, const FilterQuery& q) {
  const auto& loc = e.location();
  if (q.geotagged && *q.geotagged != loc.has_value()) return false;
  if (q.bbox && q.geotagged != false) {
    if (!loc || !q.bbox->Contains(loc->point())) return false;
  }
  if (q.categories && !q.categories->contains(e.category())) return false;
  if (q.keyword && !e.term_counts.contains(*q.keyword)) return false;
  if (q.since && e.last_seen < *q.since) return false;
  if (q.until && e.first_seen > *q.until) return false;
  return true;
}

std::vector<const cluster::Event*> query_events(const FilterQuery& q, std::span<const cluster::Event* const> events) {
  std::vector<const cluster::Event*> out;
  for (const cluster::Event* e : events) {
    if (event_matches(*e, q)) out.push_back(e);
  }
  auto newer = [](const cluster::Event* a, const cluster::Event* b) {
    return a->last_seen != b->last_seen ? a->last_seen > b->last_seen : a->id < b->id;
  };
  const size_t n = std::min(q.limit, out.size());
  std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(n), out.end(), newer);
  out.resize(n);
  return out;
}

}  // namespace act::store
