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

#include "act/common/files.h"
#include "act/service/snapshot.h"

namespace act::service {

Json counters_json(const Counters& c);

// Event-summary export written by `replay --no-serve`: the pipeline
// counters and every event summary, newest last_seen first (id on ties).
// Contains nothing run-dependent, so equal inputs give equal bytes.
Json export_events(const Snapshot& snap);

}  // namespace act::service
