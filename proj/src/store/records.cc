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

#include "act/store/records.h"

#include "act/common/errors.h"

namespace act::store {

std::string_view to_string(RecordKind kind) {
  return kind == RecordKind::kPost ? "post" : "event_upsert";
}

std::string encode_record(const StoreRecord& r) {
  // nlohmann::json objects are key-sorted, so dump() is canonical.
  const Json j = {{"kind", to_string(r.kind)}, {"payload", r.payload}, {"seq", r.seq}};
  return j.dump();
}

StoreRecord decode_record(std::string_view payload) {
  try {
    const Json j = Json::parse(payload);
    StoreRecord r;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "post") {
      r.kind = RecordKind::kPost;
    } else if (kind == "event_upsert") {
      r.kind = RecordKind::kEventUpsert;
    } else {
      throw CorruptionError("unknown record kind '" + kind + "'");
    }
    r.payload = j.at("payload");
    r.seq = j.at("seq").get<uint64_t>();
    return r;
  } catch (const Json::exception& e) {
    throw CorruptionError(std::string("undecodable record: ") + e.what());
  }
}

Json to_json(const StoredPost& p) {
  return {{"post", parse::to_json(p.post)},
          {"annotations", annotate::to_json(p.annotations)},
          {"event_id", p.event_id}};
}

StoredPost stored_post_from_json(const Json& j) {
  try {
    return StoredPost{parse::post_from_json(j.at("post")),
                      annotate::post_annotations_from_json(j.at("annotations")),
                      j.at("event_id").get<std::string>()};
  } catch (const Json::exception& e) {
    throw InvalidArgument("stored_post", e.what());
  }
}

void StoreState::Apply(const StoreRecord& r) {
  try {
    if (r.kind == RecordKind::kPost) {
      posts.push_back(stored_post_from_json(r.payload));
    } else {
      cluster::Event e = cluster::event_from_json(r.payload);
      std::string id = e.id;
      events.insert_or_assign(std::move(id), std::move(e));
    }
  } catch (const InvalidArgument& e) {
    throw CorruptionError("record " + std::to_string(r.seq) + ": " + e.what());
  }
  last_seq = r.seq;
}

}  // namespace act::store
