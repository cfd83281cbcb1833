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

#include "act/annotate/gazetteer.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <cmath>

#include "act/common/csv.h"
#include "act/common/errors.h"
#include "act/common/files.h"
#include "act/common/utf8.h"
#include "act/parse/tokenizer.h"

namespace act::annotate {

namespace {

std::string join(std::span<const std::string> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

template <typename T>
bool parse_number(const std::string& s, T* out) {
  const std::string t = trim(s);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), *out);
  return ec == std::errc() && ptr == t.data() + t.size();
}

}  // namespace

Gazetteer Gazetteer::Load(const std::filesystem::path& path, const parse::StopwordSet& stopwords) {
  const auto lines = read_lines(path);
  std::vector<GazetteerEntry> entries;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const auto fields = split_csv_line(lines[i]);
    const std::string where = "gazetteer:" + std::to_string(i + 1);
    if (fields.size() != 5) throw InvalidArgument(where, "expected 5 columns");
    GazetteerEntry e;
    e.name = trim(fields[0]);
    if (e.name.empty()) throw InvalidArgument(where, "empty name");
    if (!parse_number(fields[1], &e.lat) || !parse_number(fields[2], &e.lon) ||
        !valid_coordinates(e.lon, e.lat)) {
      throw InvalidArgument(where, "bad coordinates");
    }
    if (!parse_number(fields[3], &e.population) || e.population < 0) {
      throw InvalidArgument(where, "bad population");
    }
    e.country = trim(fields[4]);
    entries.push_back(std::move(e));
  }
  if (lines.empty()) throw InvalidArgument("gazetteer", "missing header row");
  return FromEntries(std::move(entries), stopwords);
}

Gazetteer Gazetteer::FromEntries(std::vector<GazetteerEntry> entries,
                                 const parse::StopwordSet& stopwords) {
  Gazetteer g;
  g.entries_ = std::move(entries);
  for (size_t i = 0; i < g.entries_.size(); ++i) {
    const auto& e = g.entries_[i];
    const auto tokens = parse::tokenize(e.name, stopwords);
    if (tokens.empty()) {
      spdlog::warn("gazetteer entry '{}' has no searchable tokens", e.name);
    } else {
      g.max_span_ = std::max(g.max_span_, tokens.size());
      auto [it, inserted] = g.by_name_.try_emplace(join(tokens), i);
      if (!inserted && g.entries_[it->second].population < e.population) it->second = i;
    }
    const int lat_cell = static_cast<int>(std::floor(e.lat));
    const int lon_cell = static_cast<int>(std::floor(e.lon));
    g.grid_[CellKey(lat_cell, lon_cell)].push_back(i);
  }
  return g;
}

const GazetteerEntry* Gazetteer::FindSpan(std::span<const std::string> span) const {
  if (span.empty() || span.size() > max_span_) return nullptr;
  auto it = by_name_.find(join(span));
  return it == by_name_.end() ? nullptr : &entries_[it->second];
}

const GazetteerEntry* Gazetteer::Nearest(const GeoPoint& p, double max_km) const {
  // One degree of latitude is ~111 km; widen the longitude search by the
  // latitude's shrink factor.
  const int lat_reach = static_cast<int>(std::ceil(max_km / 111.0));
  const double cos_lat = std::max(0.01, std::cos(std::min(89.0, std::abs(p.lat) + lat_reach) * M_PI / 180.0));
  const int lon_reach = std::min(180, static_cast<int>(std::ceil(max_km / (111.0 * cos_lat))));
  const int lat0 = static_cast<int>(std::floor(p.lat));
  const int lon0 = static_cast<int>(std::floor(p.lon));

  const GazetteerEntry* best = nullptr;
  double best_km = 0.0;
  for (int dlat = -lat_reach; dlat <= lat_reach; ++dlat) {
    for (int dlon = -lon_reach; dlon <= lon_reach; ++dlon) {
      int lon_cell = lon0 + dlon;
      if (lon_cell < -180) lon_cell += 360;
      if (lon_cell >= 180) lon_cell -= 360;
      auto it = grid_.find(CellKey(lat0 + dlat, lon_cell));
      if (it == grid_.end()) continue;
      for (size_t idx : it->second) {
        const auto& e = entries_[idx];
        const double km = haversine_km(p, e.point());
        if (km > max_km) continue;
        if (!best || km < best_km || (km == best_km && e.population > best->population)) {
          best = &e;
          best_km = km;
        }
      }
    }
  }
  return best;
}

}  // namespace act::annotate
