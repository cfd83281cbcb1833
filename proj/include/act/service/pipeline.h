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

#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "act/annotate/annotator.h"
#include "act/cluster/clusterer.h"
#include "act/ingest/source.h"
#include "act/ingest/track.h"
#include "act/parse/noise.h"
#include "act/parse/post.h"
#include "act/service/config.h"
#include "act/service/snapshot.h"
#include "act/store/segment_log.h"

namespace act::service {

struct PipelineOptions {
  cluster::ClusterParams cluster;
  double anger_threshold = annotate::kDefaultAngerThreshold;
  size_t snapshot_batch = 50;
  size_t queue_capacity = 1024;
};

PipelineOptions pipeline_options(const ApiConfig& cfg);

// The single mutator: track filter -> parse -> noise filter -> annotate ->
// cluster -> store, publishing a snapshot every `snapshot_batch` kept posts
// and at the end of a stream. Only one thread may call the mutating
// methods; any thread may read snapshots.
class Pipeline {
 public:
  Pipeline(std::shared_ptr<const Resources> resources, ingest::TrackConfig track, PipelineOptions options,
           store::SegmentLog* log = nullptr);

  void Process(const ingest::RawPost& raw);

  // Persists changed events and publishes a new snapshot.
  void Publish();

  // Rebuilds clustering state from stored posts without re-appending them,
  // then publishes. Events whose state differs from their last upsert are
  // persisted again.
  void Restore(const store::StoreState& state);

  // Feeds `source` through a bounded queue from a producer thread and
  // processes it here; publishes when the stream ends.
  void Run(ingest::PostSource& source, double replay_speed);

  // Adds media (e.g. from the remote source) to the index published with
  // the next snapshot.
  void AddMedia(std::vector<media::MediaItem> items);

  std::shared_ptr<const Snapshot> snapshot() const { return publisher_.Current(); }
  const SnapshotPublisher& publisher() const { return publisher_; }
  const Counters& counters() const { return counters_; }
  const cluster::Clusterer& clusterer() const { return clusterer_; }

 private:
  void Admit(store::StoredPost stored, const std::vector<annotate::PlaceCandidate>& places);

  std::shared_ptr<const Resources> resources_;
  ingest::TrackConfig track_;
  PipelineOptions options_;
  store::SegmentLog* log_;

  parse::Parser parser_;
  parse::NoiseFilter noise_;
  annotate::Annotator annotator_;
  cluster::Clusterer clusterer_;

  std::vector<std::shared_ptr<const store::StoredPost>> posts_;
  std::unordered_map<std::string, size_t> post_index_;
  std::vector<size_t> agency_posts_;
  std::vector<std::shared_ptr<const cluster::Event>> published_events_;
  std::shared_ptr<const media::MediaIndex> media_;
  Counters counters_;
  size_t since_publish_ = 0;
  uint64_t snapshot_seq_ = 0;
  SnapshotPublisher publisher_;
};

}  // namespace act::service
