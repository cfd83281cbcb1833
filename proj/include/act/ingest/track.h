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

#include <set>
#include <string>

#include "act/ingest/raw_post.h"

namespace act::ingest {

struct TrackConfig {
  std::set<std::string, std::less<>> accounts;  // lowercase screen names
  std::set<std::string, std::less<>> keywords;  // lowercase terms
  double replay_speed = 0.0;                     // 0 = as fast as possible

  // Throws InvalidArgument when both sets are empty, a keyword is not
  // lowercase, or the speed is negative.
  void Validate() const;

  // Lowercases accounts and keywords.
  static TrackConfig Make(const std::set<std::string>& accounts, const std::set<std::string>& keywords,
                          double replay_speed = 0.0);
};

// Author in accounts (case-insensitive), or a tracked keyword appears as a
// whole term of the text. Hashtag bodies are terms.
bool matches_track(const RawPost& raw, const TrackConfig& cfg);

}  // namespace act::ingest
