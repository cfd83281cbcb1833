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

#include <span>
#include <vector>

#include "act/cluster/event.h"

namespace act::cluster {

struct RelatedWeights {
  double geo = 0.4;
  double time = 0.3;
  double category = 0.3;
  double geo_scale_km = 50.0;
  double time_scale_hours = 6.0;
};

struct RelatedEvent {
  const Event* event = nullptr;
  double score = 0.0;
};

// Hours between two spans; 0 when they overlap.
double span_gap_hours(const Event& a, const Event& b);

double related_score(const Event& e, const Event& f, const RelatedWeights& w = {});

// Top `k` events by related_score, excluding `e` itself. Ties go to the
// newer last_seen, then the smaller id.
std::vector<RelatedEvent> related_events(const Event& e, std::span<const Event* const> all, size_t k = 5,
                                         const RelatedWeights& w = {});

}  // namespace act::cluster
