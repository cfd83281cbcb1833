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

#include "act/service/export.h"

#include <algorithm>

#include "act/service/api.h"

namespace act::service {

Json counters_json(const Counters& c) {
  Json dropped = Json::object();
  for (const auto& [reason, n] : c.dropped) dropped[reason] = n;
  return {{"posts_ingested", c.posts_ingested},
          {"posts_untracked", c.posts_untracked},
          {"posts_kept", c.posts_kept},
          {"duplicate_ids", c.duplicate_ids},
          {"skipped_lines", c.skipped_lines},
          {"dropped", std::move(dropped)}};
}

Json export_events(const Snapshot& snap) {
  auto events = snap.EventPtrs();
  std::sort(events.begin(), events.end(), [](const cluster::Event* a, const cluster::Event* b) {
    if (a->last_seen != b->last_seen) return a->last_seen > b->last_seen;
    return a->id < b->id;
  });
  Json list = Json::array();
  for (const cluster::Event* e : events) list.push_back(event_summary_json(*e));
  return {{"counters", counters_json(snap.counters)}, {"events_count", events.size()}, {"events", std::move(list)}};
}

}  // namespace act::service
