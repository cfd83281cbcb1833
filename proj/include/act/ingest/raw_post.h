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

#include <optional>
#include <string>
#include <string_view>

#include "act/common/files.h"
#include "act/common/geo.h"
#include "act/common/time.h"

namespace act::ingest {

enum class SourceTag { kReplay, kSynthetic, kRemote };

std::string_view to_string(SourceTag tag);

// One microblog record as received, before any parsing.
struct RawPost {
  std::string id;
  Timestamp created_at;
  std::string author;
  std::string text;
  std::optional<GeoPoint> coords;
  SourceTag source_tag = SourceTag::kReplay;

  bool operator==(const RawPost&) const = default;
};

// Corpus line <-> RawPost. Parsing throws InvalidArgument naming the bad key.
RawPost raw_post_from_json(const Json& j, SourceTag tag);
RawPost parse_raw_post_line(std::string_view line, SourceTag tag);
Json to_json(const RawPost& raw);

}  // namespace act::ingest
