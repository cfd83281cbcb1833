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
#include <string>
#include <vector>

#include "act/annotate/annotator.h"
#include "act/cluster/term_vector.h"
#include "act/common/files.h"
#include "act/common/time.h"

namespace act::cluster {

// One distinct norm_text inside an event and the post that introduced it.
struct TextEntry {
  std::string representative_id;
  Timestamp representative_time;
  int64_t count = 0;

  bool operator==(const TextEntry&) const = default;
};

struct Event {
  std::string id;  // "ev-" + founding post id
  std::vector<std::string> member_ids;
  std::map<std::string, TextEntry> unique_texts;  // norm_text -> entry
  TermVector centroid;                            // L2-normalized mean of member vectors
  TermVector centroid_sum;                        // running sum of member vectors
  double centroid_norm = 0.0;
  Timestamp first_seen;
  Timestamp last_seen;
  std::map<std::string, int64_t, std::less<>> term_counts;
  annotate::EventAnnotations annotations;
  uint64_t revision = 0;  // bumped on every new member

  size_t post_count() const { return member_ids.size(); }
  annotate::Category category() const { return annotations.category; }
  const std::optional<annotate::EventLocation>& location() const { return annotations.location; }
  const annotate::EventSentiment& sentiment() const { return annotations.sentiment; }

  bool operator==(const Event&) const = default;
};

// Most repeated distinct text; ties go to the earlier representative, then
// the smaller text.
const std::string& headline(const Event& e);

// Full event state, used for store upserts.
Json to_json(const Event& e);
Event event_from_json(const Json& j);

}  // namespace act::cluster
