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

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "act/cluster/event.h"
#include "act/media/media_index.h"
#include "act/store/records.h"

namespace act::service {

struct Counters {
  uint64_t posts_ingested = 0;   // records read from the stream
  uint64_t posts_untracked = 0;  // failed the track filter
  uint64_t posts_kept = 0;
  uint64_t duplicate_ids = 0;
  uint64_t skipped_lines = 0;
  std::map<std::string, uint64_t> dropped;  // noise reason -> count

  bool operator==(const Counters&) const = default;
};

// Immutable view of the pipeline at one publication point. Unchanged
// events and posts are shared between consecutive snapshots.
struct Snapshot {
  uint64_t seq = 0;
  std::vector<std::shared_ptr<const cluster::Event>> events;  // creation order
  std::unordered_map<std::string, size_t> event_index;
  std::vector<std::shared_ptr<const store::StoredPost>> posts;  // kept posts, ingest order
  std::unordered_map<std::string, size_t> post_index;
  std::vector<size_t> agency_posts;  // indices into `posts`
  std::shared_ptr<const media::MediaIndex> media;
  Counters counters;

  const cluster::Event* FindEvent(std::string_view id) const;
  const store::StoredPost* FindPost(std::string_view id) const;
  std::vector<const cluster::Event*> EventPtrs() const;
  std::vector<const parse::Post*> Members(const cluster::Event& e) const;
};

// Atomic publication point: readers see the old or the new snapshot,
// never a partial one.
class SnapshotPublisher {
 public:
  SnapshotPublisher();

  std::shared_ptr<const Snapshot> Current() const;
  void Publish(std::shared_ptr<const Snapshot> next);

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const Snapshot> current_;
};

}  // namespace act::service
