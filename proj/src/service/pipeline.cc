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

#include "act/service/pipeline.h"

#include <spdlog/spdlog.h>

#include <exception>
#include <thread>

#include "act/common/errors.h"
#include "act/ingest/queue.h"

namespace act::service {

PipelineOptions pipeline_options(const ApiConfig& cfg) {
  PipelineOptions o;
  o.cluster = cluster_params(cfg.pipeline);
  o.anger_threshold = cfg.pipeline.anger_threshold;
  o.snapshot_batch = cfg.pipeline.snapshot_batch;
  o.queue_capacity = cfg.pipeline.queue_capacity;
  return o;
}

Pipeline::Pipeline(std::shared_ptr<const Resources> resources, ingest::TrackConfig track,
                   PipelineOptions options, store::SegmentLog* log)
    : resources_(std::move(resources)),
      track_(std::move(track)),
      options_(options),
      log_(log),
      parser_(resources_->stopwords, track_.accounts),
      noise_(resources_->noise_rules),
      annotator_(resources_->gazetteer, resources_->category_rules, resources_->lexicon, options.anger_threshold),
      clusterer_(options.cluster),
      media_(resources_->media_index ? resources_->media_index : std::make_shared<media::MediaIndex>()) {
  if (options_.snapshot_batch == 0) options_.snapshot_batch = 1;
  Publish();
}

void Pipeline::Process(const ingest::RawPost& raw) {
  ++counters_.posts_ingested;
  if (!ingest::matches_track(raw, track_)) {
    ++counters_.posts_untracked;
    return;
  }
  parse::Post post = parser_.parse(raw);
  if (post_index_.contains(post.id)) {
    ++counters_.duplicate_ids;
    return;
  }
  const parse::NoiseVerdict verdict = noise_.Classify(post);
  if (!verdict.keep) {
    ++counters_.dropped[std::string(parse::to_string(verdict.reason))];
    return;
  }
  store::StoredPost stored;
  stored.annotations = annotator_.Annotate(post);
  const auto places = annotator_.Places(post, stored.annotations);
  stored.post = std::move(post);
  Admit(std::move(stored), places);
  if (log_) log_->Append(store::RecordKind::kPost, store::to_json(*posts_.back()));
  if (++since_publish_ >= options_.snapshot_batch) Publish();
}

void Pipeline::Admit(store::StoredPost stored, const std::vector<annotate::PlaceCandidate>& places) {
  const cluster::Assignment a = clusterer_.Assign(stored.post);
  clusterer_.mutable_event(a.event_index).annotations.Add(stored.annotations, places, options_.anger_threshold);
  if (!stored.event_id.empty() && stored.event_id != a.event_id) {
    spdlog::warn("post {} restored into {} but was stored under {}", stored.post.id, a.event_id, stored.event_id);
  }
  stored.event_id = a.event_id;
  post_index_.emplace(stored.post.id, posts_.size());
  if (stored.post.is_agency) agency_posts_.push_back(posts_.size());
  posts_.push_back(std::make_shared<const store::StoredPost>(std::move(stored)));
  ++counters_.posts_kept;
}

void Pipeline::Publish() {
  for (size_t idx : clusterer_.TakeDirty()) {
    auto event = std::make_shared<const cluster::Event>(clusterer_.events()[idx]);
    if (log_) log_->Append(store::RecordKind::kEventUpsert, cluster::to_json(*event));
    if (idx >= published_events_.size()) published_events_.resize(idx + 1);
    published_events_[idx] = std::move(event);
  }
  auto snap = std::make_shared<Snapshot>();
  snap->seq = ++snapshot_seq_;
  snap->events = published_events_;
  snap->event_index.reserve(published_events_.size());
  for (size_t i = 0; i < published_events_.size(); ++i) snap->event_index.emplace(published_events_[i]->id, i);
  snap->posts = posts_;
  snap->post_index = post_index_;
  snap->agency_posts = agency_posts_;
  snap->media = media_;
  snap->counters = counters_;
  publisher_.Publish(std::move(snap));
  since_publish_ = 0;
}

void Pipeline::Restore(const store::StoreState& state) {
  for (const auto& stored : state.posts) {
    if (post_index_.contains(stored.post.id)) continue;
    noise_.Classify(stored.post);  // re-primes the duplicate-flood window
    const auto places = annotator_.Places(stored.post, stored.annotations);
    Admit(stored, places);
  }
  for (size_t idx : clusterer_.TakeDirty()) {
    const cluster::Event& e = clusterer_.events()[idx];
    auto it = state.events.find(e.id);
    if (log_ && (it == state.events.end() || !(it->second == e))) {
      log_->Append(store::RecordKind::kEventUpsert, cluster::to_json(e));
    }
    if (idx >= published_events_.size()) published_events_.resize(idx + 1);
    published_events_[idx] = std::make_shared<const cluster::Event>(e);
  }
  Publish();
}

void Pipeline::Run(ingest::PostSource& source, double replay_speed) {
  ingest::BoundedQueue<ingest::RawPost> queue(options_.queue_capacity);
  std::exception_ptr producer_error;
  ingest::FeedResult fed;
  std::thread producer([&] {
    try {
      ingest::ReplayPacer pacer(replay_speed);
      fed = ingest::run_feeder(source, pacer, queue);
    } catch (...) {
      producer_error = std::current_exception();
    }
  });
  try {
    while (auto raw = queue.Pop()) Process(*raw);
  } catch (...) {
    queue.Close();
    producer.join();
    throw;
  }
  producer.join();
  if (producer_error) std::rethrow_exception(producer_error);
  counters_.skipped_lines += fed.skipped;
  if (fed.skipped > 0) spdlog::warn("{}: skipped {} malformed records", source.Describe(), fed.skipped);
  Publish();
}

void Pipeline::AddMedia(std::vector<media::MediaItem> items) {
  auto next = std::make_shared<media::MediaIndex>(*media_);
  for (auto& item : items) next->Add(std::move(item));
  media_ = std::move(next);
}

}  // namespace act::service
