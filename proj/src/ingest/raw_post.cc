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

#include "act/ingest/raw_post.h"

#include "act/common/errors.h"

namespace act::ingest {

std::string_view to_string(SourceTag tag) {
  switch (tag) {
    case SourceTag::kReplay: return "replay";
    case SourceTag::kSynthetic: return "synthetic";
    case SourceTag::kRemote: return "remote";
  }
  return "replay";
}

RawPost raw_post_from_json(const Json& j, SourceTag tag) {
  if (!j.is_object()) throw InvalidArgument("record", "expected a JSON object");
  auto string_field = [&](const char* key) -> std::string {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) throw InvalidArgument(key, "missing or not a string");
    return it->get<std::string>();
  };
  RawPost raw;
  raw.id = string_field("id");
  if (raw.id.empty()) throw InvalidArgument("id", "must be non-empty");
  raw.created_at = parse_timestamp(string_field("created_at"), "created_at");
  raw.author = string_field("user");
  raw.text = string_field("text");
  if (auto it = j.find("coordinates"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number()) {
      throw InvalidArgument("coordinates", "expected [lon, lat]");
    }
    const double lon = (*it)[0].get<double>();
    const double lat = (*it)[1].get<double>();
    if (!valid_coordinates(lon, lat)) throw InvalidArgument("coordinates", "out of range");
    raw.coords = GeoPoint{lon, lat};
  }
  raw.source_tag = tag;
  return raw;
}

RawPost parse_raw_post_line(std::string_view line, SourceTag tag) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("line", e.what());
  }
  return raw_post_from_json(j, tag);
}

Json to_json(const RawPost& raw) {
  Json j = {{"id", raw.id},
            {"created_at", format_timestamp(raw.created_at)},
            {"user", raw.author},
            {"text", raw.text}};
  if (raw.coords) j["coordinates"] = {raw.coords->lon, raw.coords->lat};
  return j;
}

}  // namespace act::ingest
