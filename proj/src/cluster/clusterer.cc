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

#include "act/cluster/clusterer.h"

#include "act/common/errors.h"

namespace act::cluster {

Clusterer::Clusterer(ClusterParams params) : params_(params) {}

const Event* Clusterer::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &events_[it->second];
}

Assignment Clusterer::Assign(const parse::Post& post) {
  const TermVector vec = tfidf_vector(post.tokens, stats_);
  const double vec_norm = l2_norm(vec);

  Assignment out;
  bool found = false;
  for (size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    if (post.created_at - e.last_seen > params_.window) continue;
    const double sim = cosine(vec, vec_norm, e.centroid, e.centroid_norm);
    if (!found || sim > out.similarity) {
      out.similarity = sim;
      out.event_index = i;
      found = true;
    }
  }

  if (found && out.similarity >= params_.theta) {
    out.created = false;
  } else {
    std::string id = "ev-" + post.id;
    if (index_.contains(id)) throw InvalidArgument("post.id", "duplicate post id " + post.id);
    Event e;
    e.id = id;
    e.first_seen = post.created_at;
    e.last_seen = post.created_at;
    events_.push_back(std::move(e));
    out.event_index = events_.size() - 1;
    out.created = true;
    index_.emplace(std::move(id), out.event_index);
  }

  Event& e = events_[out.event_index];
  out.event_id = e.id;
  e.member_ids.push_back(post.id);
  auto [text_it, inserted] = e.unique_texts.try_emplace(post.norm_text);
  if (inserted) {
    text_it->second.representative_id = post.id;
    text_it->second.representative_time = post.created_at;
  }
  ++text_it->second.count;
  add_into(e.centroid_sum, vec);
  e.centroid = normalized(e.centroid_sum);
  e.centroid_norm = l2_norm(e.centroid);
  if (post.created_at < e.first_seen) e.first_seen = post.created_at;
  if (post.created_at > e.last_seen) e.last_seen = post.created_at;
  for (const auto& t : post.tokens) ++e.term_counts[t];
  ++e.revision;
  dirty_.insert(out.event_index);

  stats_.Add(post.tokens);
  return out;
}

std::vector<size_t> Clusterer::TakeDirty() {
  std::vector<size_t> out(dirty_.begin(), dirty_.end());
  dirty_.clear();
  return out;
}

}  // namespace act::cluster
