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
#include <string_view>
#include <vector>

#include "act/annotate/annotator.h"
#include "act/cluster/event.h"
#include "act/common/files.h"
#include "act/parse/post.h"

namespace act::store {

enum class RecordKind { kPost, kEventUpsert };

std::string_view to_string(RecordKind kind);

struct StoreRecord {
  RecordKind kind = RecordKind::kPost;
  Json payload;
  uint64_t seq = 0;

  bool operator==(const StoreRecord&) const = default;
};

// Canonical JSON: sorted keys, no insignificant whitespace.
std::string encode_record(const StoreRecord& r);
// Throws CorruptionError on anything that is not a well-formed record.
StoreRecord decode_record(std::string_view payload);

// A kept post with everything derived from it at ingest time.
struct StoredPost {
  parse::Post post;
  annotate::PostAnnotations annotations;
  std::string event_id;

  bool operator==(const StoredPost&) const = default;
};

Json to_json(const StoredPost& p);
StoredPost stored_post_from_json(const Json& j);

// Everything a directory of segments describes.
struct StoreState {
  std::vector<StoredPost> posts;               // append order
  std::map<std::string, cluster::Event> events;  // last upsert wins
  uint64_t last_seq = 0;

  void Apply(const StoreRecord& r);
  bool operator==(const StoreState&) const = default;
};

}  // namespace act::store
