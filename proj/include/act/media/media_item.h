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
#include <vector>

#include "act/common/files.h"
#include "act/common/geo.h"
#include "act/common/time.h"
#include "act/parse/post.h"
#include "act/parse/stopwords.h"

namespace act::media {

enum class MediaOrigin { kPostEmbedded, kLocalCorpus, kRemote };

std::string_view to_string(MediaOrigin origin);

struct MediaItem {
  std::string id;
  std::string url;
  std::string caption;
  std::vector<std::string> caption_tokens;
  std::optional<GeoPoint> coords;
  Timestamp created_at;
  MediaOrigin origin = MediaOrigin::kLocalCorpus;

  bool operator==(const MediaItem&) const = default;
};

// Media corpus line. Throws InvalidArgument naming the bad key.
MediaItem media_from_json(const Json& j, MediaOrigin origin,
                          const parse::StopwordSet& stopwords = parse::default_stopwords());
Json to_json(const MediaItem& item);

// .jpg/.jpeg/.png/.gif, case-insensitive, after dropping any query string
// or fragment.
bool is_image_url(std::string_view url);

// One item per image URL in the post. The URL doubles as the item id so the
// same picture shared by several posts collapses to one entry.
std::vector<MediaItem> embedded_media(const parse::Post& post);

}  // namespace act::media
