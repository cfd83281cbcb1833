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

#include <chrono>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "act/cluster/event.h"
#include "act/cluster/term_vector.h"
#include "act/parse/post.h"

namespace act::cluster {

struct ClusterParams {
  double theta = 0.5;
  Seconds window = std::chrono::hours(6);
};

struct Assignment {
  std::string event_id;
  size_t event_index = 0;
  bool created = false;
  double similarity = 0.0;  // best cosine seen; 0 when no event was active
};

// Single-pass clustering. A post joins the most similar active event when
// the cosine to its centroid reaches theta (ties go to the older event),
// otherwise it founds a new one. An event is active for a post when its
// last_seen is at most `window` before the post. Vectors use corpus stats
// as of assignment time and are never re-weighted. Events never merge.
class Clusterer {
 public:
  explicit Clusterer(ClusterParams params = {});

  // `post` must carry at least one token. Throws InvalidArgument when the
  // founding id would collide with an existing event.
  Assignment Assign(const parse::Post& post);

  const std::vector<Event>& events() const { return events_; }
  Event& mutable_event(size_t index) { return events_[index]; }
  const Event* Find(std::string_view id) const;
  const CorpusStats& stats() const { return stats_; }
  const ClusterParams& params() const { return params_; }

  // Indices of events changed since the previous call, ascending.
  std::vector<size_t> TakeDirty();

 private:
  ClusterParams params_;
  CorpusStats stats_;
  std::vector<Event> events_;
  std::unordered_map<std::string, size_t> index_;
  std::set<size_t> dirty_;
};

}  // namespace act::cluster
