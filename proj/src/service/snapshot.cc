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

#include "act/service/snapshot.h"

namespace act::service {

const cluster::Event* Snapshot::FindEvent(std::string_view id) const {
  auto it = event_index.find(std::string(id));
  return it == event_index.end() ? nullptr : events[it->second].get();
}

const store::StoredPost* Snapshot::FindPost(std::string_view id) const {
  auto it = post_index.find(std::string(id));
  return it == post_index.end() ? nullptr : posts[it->second].get();
}

std::vector<const cluster::Event*> Snapshot::EventPtrs() const {
  std::vector<const cluster::Event*> out;
  out.reserve(events.size());
  for (const auto& e : events) out.push_back(e.get());
  return out;
}

std::vector<const parse::Post*> Snapshot::Members(const cluster::Event& e) const {
  std::vector<const parse::Post*> out;
  out.reserve(e.member_ids.size());
  for (const auto& id : e.member_ids) {
    if (const store::StoredPost* p = FindPost(id)) out.push_back(&p->post);
  }
  return out;
}

SnapshotPublisher::SnapshotPublisher() : current_(std::make_shared<Snapshot>()) {}

std::shared_ptr<const Snapshot> SnapshotPublisher::Current() const {
  std::lock_guard lock(mu_);
  return current_;
}

void SnapshotPublisher::Publish(std::shared_ptr<const Snapshot> next) {
  std::lock_guard lock(mu_);
  current_ = std::move(next);
}

}  // namespace act::service
