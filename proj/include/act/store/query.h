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
#include "act/store/filter_query.h"

namespace act::store {

// Conjunction of every filter present in `q`; see FilterQuery.
bool event_matches(const cluster::Event& e, const FilterQuery& q);

// Matching events, newest last_seen first (id on ties), truncated to
// q.limit. `q` must already be valid.
std::vector<const cluster::Event*> query_events(const FilterQuery& q, std::span<const cluster::Event* const> events);

}  // namespace act::store
