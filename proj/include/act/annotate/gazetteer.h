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
#include <span>
#include <string>
#include <vector>

#include "act/common/geo.h"
#include "act/parse/stopwords.h"

namespace act::annotate {

struct GazetteerEntry {
  std::string name;  // lowercase, may span several tokens
  double lon = 0.0;
  double lat = 0.0;
  int64_t population = 0;
  std::string country;  // ISO 3166-1 alpha-2

  GeoPoint point() const { return {lon, lat}; }
  bool operator==(const GazetteerEntry&) const = default;
};

// Exact token-span lookup plus nearest-entry search. Names are tokenized
// with the same stopword list as posts so both sides split identically.
class Gazetteer {
 public:
  Gazetteer() = default;

  // CSV with header `name,lat,lon,population,country`. Throws IoError or
  // InvalidArgument("gazetteer:LINE").
  static Gazetteer Load(const std::filesystem::path& path,
                        const parse::StopwordSet& stopwords = parse::default_stopwords());

  static Gazetteer FromEntries(std::vector<GazetteerEntry> entries,
                               const parse::StopwordSet& stopwords = parse::default_stopwords());

  // Best entry whose tokenized name equals `span`: highest population,
  // then earliest in file order. Null when nothing matches.
  const GazetteerEntry* FindSpan(std::span<const std::string> span) const;

  // Nearest entry within `max_km`, ties to the larger population.
  const GazetteerEntry* Nearest(const GeoPoint& p, double max_km) const;

  size_t max_span() const { return max_span_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<GazetteerEntry>& entries() const { return entries_; }

 private:
  static int64_t CellKey(int lat_cell, int lon_cell) {
    return static_cast<int64_t>(lat_cell) * 1000 + lon_cell;
  }

  std::vector<GazetteerEntry> entries_;
  std::map<std::string, size_t, std::less<>> by_name_;  // joined tokens -> entry index
  std::map<int64_t, std::vector<size_t>> grid_;         // 1-degree cells
  size_t max_span_ = 0;
};

}  // namespace act::annotate
