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

#include "act/media/finder.h"

#include <algorithm>
#include <cmath>

#include "act/cluster/trending.h"

namespace act::media {

MediaQuery build_media_query(const cluster::Event& e, const annotate::CategoryRules& rules,
                             const MediaWeights& w) {
  MediaQuery q;
  for (const auto& [term, count] : cluster::top_terms(e, w.query_terms)) q.terms.insert(term);
  for (const auto& kw : rules.keywords_for(e.category())) q.terms.insert(kw);
  if (e.location()) q.center = e.location()->point();
  q.span_first = e.first_seen;
  q.span_last = e.last_seen;
  q.from = e.first_seen - w.window_pad;
  q.to = e.last_seen + w.window_pad;
  return q;
}

double jaccard(std::span<const std::string> caption_tokens, const std::set<std::string>& terms) {
  const std::set<std::string> caption(caption_tokens.begin(), caption_tokens.end());
  size_t shared = 0;
  for (const auto& t : caption) shared += terms.count(t);
  const size_t united = caption.size() + terms.size() - shared;
  return united == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(united);
}

double hours_to_span(Timestamp t, Timestamp first, Timestamp last) {
  if (t < first) return hours_between(t, first);
  if (t > last) return hours_between(last, t);
  return 0.0;
}

double media_score(const MediaItem& item, const MediaQuery& q, const MediaWeights& w) {
  const double content = jaccard(item.caption_tokens, q.terms);
  double geo = 0.0;
  if (item.coords && q.center) geo = std::exp(-haversine_km(*item.coords, *q.center) / w.geo_scale_km);
  const double time = std::exp(-hours_to_span(item.created_at, q.span_first, q.span_last) / w.time_scale_hours);
  return w.content * content + w.geo * geo + w.time * time;
}

std::vector<RankedMedia> find_media(const cluster::Event& e, std::span<const parse::Post* const> members,
                                    const MediaIndex& index, const annotate::CategoryRules& rules, size_t k,
                                    const MediaWeights& w) {
  std::vector<RankedMedia> out;
  std::set<std::string> seen;
  for (const parse::Post* p : members) {
    for (auto& item : embedded_media(*p)) {
      if (out.size() >= k) return out;
      if (seen.insert(item.id).second) out.push_back({std::move(item), std::nullopt});
    }
  }

  const MediaQuery q = build_media_query(e, rules, w);
  std::vector<std::pair<const MediaItem*, double>> scored;
  for (const MediaItem* item : index.InWindow(q.from, q.to)) {
    if (seen.contains(item->id)) continue;
    const double s = media_score(*item, q, w);
    if (s >= w.min_score) scored.emplace_back(item, s);
  }
  // InWindow is oldest-first, so a stable sort keeps older items ahead on ties.
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  for (const auto& [item, s] : scored) {
    if (out.size() >= k) break;
    out.push_back({*item, s});
  }
  return out;
}

}  // namespace act::media
