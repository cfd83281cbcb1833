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
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "act/media/media_item.h"

namespace act::media {

struct IndexReport {
  uint64_t indexed = 0;
  uint64_t skipped = 0;     // malformed lines
  uint64_t duplicates = 0;  // ids already present; the first copy is kept
};

// Media searchable by token, time and 0.5-degree geo cell.
class MediaIndex {
 public:
  static constexpr double kCellDegrees = 0.5;

  // Returns false (and leaves the index unchanged) for a duplicate id.
  bool Add(MediaItem item);

  // Indexes every valid line of a JSON Lines corpus. Throws IoError when
  // the file cannot be read; malformed lines are skipped and counted.
  IndexReport AddCorpus(const std::filesystem::path& path, MediaOrigin origin,
                        const parse::StopwordSet& stopwords = parse::default_stopwords());

  // Items with from <= created_at <= to, oldest first (id order on ties).
  std::vector<const MediaItem*> InWindow(Timestamp from, Timestamp to) const;
  std::vector<const MediaItem*> WithToken(std::string_view token) const;
  std::vector<const MediaItem*> InCell(const GeoPoint& p) const;

  const MediaItem* Find(std::string_view id) const;
  size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  // Bumped on every successful Add.
  uint64_t version() const { return version_; }

  // Canonical export of the index contents.
  Json Dump() const;

  static std::pair<int, int> Cell(const GeoPoint& p);

 private:
  std::vector<MediaItem> items_;
  std::map<std::string, size_t, std::less<>> by_id_;
  std::multimap<std::pair<Timestamp, std::string>, size_t> by_time_;
  std::map<std::string, std::vector<size_t>, std::less<>> by_token_;
  std::map<std::pair<int, int>, std::vector<size_t>> by_cell_;
  uint64_t version_ = 0;
};

// index_media: a fresh index over one corpus file.
MediaIndex index_media(const std::filesystem::path& path, IndexReport* report = nullptr,
                       const parse::StopwordSet& stopwords = parse::default_stopwords());

// Remote photo platform. Only a replay stub that reads a second corpus
// file ships.
class MediaSource {
 public:
  virtual ~MediaSource() = default;
  virtual std::vector<MediaItem> Fetch() = 0;
};

class ReplayMediaSource final : public MediaSource {
 public:
  explicit ReplayMediaSource(std::filesystem::path path,
                             const parse::StopwordSet& stopwords = parse::default_stopwords());
  std::vector<MediaItem> Fetch() override;
  uint64_t skipped() const { return skipped_; }

 private:
  std::filesystem::path path_;
  parse::StopwordSet stopwords_;
  uint64_t skipped_ = 0;
  bool drained_ = false;
};

}  // namespace act::media
