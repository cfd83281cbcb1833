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

#include "act/media/media_item.h"

#include "act/common/errors.h"
#include "act/common/utf8.h"
#include "act/parse/tokenizer.h"

namespace act::media {

std::string_view to_string(MediaOrigin origin) {
  switch (origin) {
    case MediaOrigin::kPostEmbedded: return "post_embedded";
    case MediaOrigin::kLocalCorpus: return "local_corpus";
    case MediaOrigin::kRemote: return "remote";
  }
  return "local_corpus";
}

MediaItem media_from_json(const Json& j, MediaOrigin origin, const parse::StopwordSet& stopwords) {
  if (!j.is_object()) throw InvalidArgument("record", "expected a JSON object");
  auto string_field = [&](const char* key) -> std::string {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) throw InvalidArgument(key, "missing or not a string");
    return it->get<std::string>();
  };
  MediaItem item;
  item.id = string_field("id");
  if (item.id.empty()) throw InvalidArgument("id", "must be non-empty");
  item.url = string_field("url");
  item.caption = string_field("caption");
  item.caption_tokens = parse::tokenize(item.caption, stopwords);
  item.created_at = parse_timestamp(string_field("created_at"), "created_at");
  if (auto it = j.find("coordinates"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number()) {
      throw InvalidArgument("coordinates", "expected [lon, lat]");
    }
    const double lon = (*it)[0].get<double>();
    const double lat = (*it)[1].get<double>();
    if (!valid_coordinates(lon, lat)) throw InvalidArgument("coordinates", "out of range");
    item.coords = GeoPoint{lon, lat};
  }
  item.origin = origin;
  return item;
}

Json to_json(const MediaItem& item) {
  Json j = {{"id", item.id},
            {"url", item.url},
            {"caption", item.caption},
            {"caption_tokens", item.caption_tokens},
            {"created_at", format_timestamp(item.created_at)},
            {"origin", to_string(item.origin)}};
  if (item.coords) j["coordinates"] = {item.coords->lon, item.coords->lat};
  return j;
}

bool is_image_url(std::string_view url) {
  const auto cut = url.find_first_of("?#");
  if (cut != std::string_view::npos) url = url.substr(0, cut);
  const std::string lower = utf8::to_lower(url);
  for (std::string_view ext : {".jpg", ".jpeg", ".png", ".gif"}) {
    if (lower.ends_with(ext)) return true;
  }
  return false;
}

std::vector<MediaItem> embedded_media(const parse::Post& post) {
  std::vector<MediaItem> out;
  for (const auto& url : post.urls) {
    if (!is_image_url(url)) continue;
    MediaItem item;
    item.id = url;
    item.url = url;
    item.caption = post.text;
    item.caption_tokens = post.tokens;
    item.coords = post.coords;
    item.created_at = post.created_at;
    item.origin = MediaOrigin::kPostEmbedded;
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace act::media
