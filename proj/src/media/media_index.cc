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

#include "act/media/media_index.h"

#include <spdlog/spdlog.h>

#include <cmath>
#include <fstream>
#include <set>

#include "act/common/errors.h"

namespace act::media {

namespace {

template <typename Fn>
uint64_t for_each_line(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in || std::filesystem::is_directory(path)) throw IoError("cannot open media corpus " + path.string());
  uint64_t skipped = 0;
  uint64_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(Json::parse(line));
    } catch (const Json::parse_error& e) {
      ++skipped;
      spdlog::warn("{}:{}: skipping malformed media record ({})", path.string(), line_no, e.what());
    } catch (const InvalidArgument& e) {
      ++skipped;
      spdlog::warn("{}:{}: skipping malformed media record ({})", path.string(), line_no, e.what());
    }
  }
  return skipped;
}

}  // namespace

std::pair<int, int> MediaIndex::Cell(const GeoPoint& p) {
  return {static_cast<int>(std::floor(p.lon / kCellDegrees)), static_cast<int>(std::floor(p.lat / kCellDegrees))};
}

bool MediaIndex::Add(MediaItem item) {
  if (by_id_.contains(item.id)) return false;
  const size_t idx = items_.size();
  by_id_.emplace(item.id, idx);
  by_time_.emplace(std::make_pair(item.created_at, item.id), idx);
  for (const auto& t : std::set<std::string>(item.caption_tokens.begin(), item.caption_tokens.end())) {
    by_token_[t].push_back(idx);
  }
  if (item.coords) by_cell_[Cell(*item.coords)].push_back(idx);
  items_.push_back(std::move(item));
  ++version_;
  return true;
}

IndexReport MediaIndex::AddCorpus(const std::filesystem::path& path, MediaOrigin origin,
                                  const parse::StopwordSet& stopwords) {
  IndexReport report;
  report.skipped = for_each_line(path, [&](const Json& j) {
    if (Add(media_from_json(j, origin, stopwords))) {
      ++report.indexed;
    } else {
      ++report.duplicates;
    }
  });
  return report;
}

std::vector<const MediaItem*> MediaIndex::InWindow(Timestamp from, Timestamp to) const {
  std::vector<const MediaItem*> out;
  if (to < from) return out;
  auto it = by_time_.lower_bound(std::make_pair(from, std::string()));
  for (; it != by_time_.end() && it->first.first <= to; ++it) out.push_back(&items_[it->second]);
  return out;
}

std::vector<const MediaItem*> MediaIndex::WithToken(std::string_view token) const {
  std::vector<const MediaItem*> out;
  if (auto it = by_token_.find(token); it != by_token_.end()) {
    for (size_t idx : it->second) out.push_back(&items_[idx]);
  }
  return out;
}

std::vector<const MediaItem*> MediaIndex::InCell(const GeoPoint& p) const {
  std::vector<const MediaItem*> out;
  if (auto it = by_cell_.find(Cell(p)); it != by_cell_.end()) {
    for (size_t idx : it->second) out.push_back(&items_[idx]);
  }
  return out;
}

const MediaItem* MediaIndex::Find(std::string_view id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &items_[it->second];
}

Json MediaIndex::Dump() const {
  Json items = Json::array();
  for (const auto& [id, idx] : by_id_) items.push_back(to_json(items_[idx]));
  Json tokens = Json::object();
  for (const auto& [t, idxs] : by_token_) {
    Json ids = Json::array();
    for (size_t idx : idxs) ids.push_back(items_[idx].id);
    tokens[t] = std::move(ids);
  }
  Json cells = Json::object();
  for (const auto& [cell, idxs] : by_cell_) {
    Json ids = Json::array();
    for (size_t idx : idxs) ids.push_back(items_[idx].id);
    cells[std::to_string(cell.first) + "," + std::to_string(cell.second)] = std::move(ids);
  }
  return {{"items", items}, {"tokens", tokens}, {"cells", cells}};
}

MediaIndex index_media(const std::filesystem::path& path, IndexReport* report,
                       const parse::StopwordSet& stopwords) {
  MediaIndex index;
  IndexReport r = index.AddCorpus(path, MediaOrigin::kLocalCorpus, stopwords);
  if (report) *report = r;
  return index;
}

ReplayMediaSource::ReplayMediaSource(std::filesystem::path path, const parse::StopwordSet& stopwords)
    : path_(std::move(path)), stopwords_(stopwords) {
  if (!std::filesystem::is_regular_file(path_)) throw IoError("cannot open remote media replay " + path_.string());
}

std::vector<MediaItem> ReplayMediaSource::Fetch() {
  std::vector<MediaItem> out;
  if (drained_) return out;
  drained_ = true;
  skipped_ += for_each_line(path_, [&](const Json& j) {
    out.push_back(media_from_json(j, MediaOrigin::kRemote, stopwords_));
  });
  return out;
}

}  // namespace act::media
