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

#include "act/annotate/geotag.h"

#include <algorithm>
#include <cstdio>

namespace act::annotate {

double span_confidence(size_t span_len) {
  if (span_len == 0) return 0.0;
  const double len = static_cast<double>(span_len);
  return std::min(1.0, len / std::min(4.0, len + 1.0));
}

std::optional<GeoTag> geotag_text(std::span<const std::string> tokens, const Gazetteer& gazetteer) {
  const GazetteerEntry* best = nullptr;
  size_t best_len = 0;
  for (size_t start = 0; start < tokens.size(); ++start) {
    const size_t max_len = std::min(gazetteer.max_span(), tokens.size() - start);
    for (size_t len = max_len; len >= 1; --len) {
      if (len < best_len) break;
      const GazetteerEntry* e = gazetteer.FindSpan(tokens.subspan(start, len));
      if (!e) continue;
      if (len > best_len || e->population > best->population) {
        best = e;
        best_len = len;
      }
      break;
    }
  }
  if (!best) return std::nullopt;
  return GeoTag{best->name, best->lon, best->lat, span_confidence(best_len), best->population,
                best->country};
}

std::vector<PlaceCandidate> location_candidates(const LocationSignal& signal, const Gazetteer& gazetteer) {
  std::vector<PlaceCandidate> out;
  if (signal.native) {
    if (const GazetteerEntry* e = gazetteer.Nearest(*signal.native, kSnapRadiusKm)) {
      out.push_back({e->name + "|" + e->country, e->name, e->lon, e->lat, e->population, 1.0});
    } else {
      char key[64];
      char name[64];
      std::snprintf(key, sizeof(key), "pt:%.4f,%.4f", signal.native->lon, signal.native->lat);
      std::snprintf(name, sizeof(name), "%.4f,%.4f", signal.native->lat, signal.native->lon);
      out.push_back({key, name, signal.native->lon, signal.native->lat, 0, 1.0});
    }
  }
  if (signal.text_tag) {
    const GeoTag& t = *signal.text_tag;
    out.push_back({t.place_name + "|" + t.country, t.place_name, t.lon, t.lat, t.population, t.confidence});
  }
  return out;
}

void add_candidates(LocationTally& tally, std::span<const PlaceCandidate> candidates) {
  for (const auto& c : candidates) {
    auto [it, inserted] = tally.try_emplace(c.key);
    PlaceTally& t = it->second;
    if (inserted) {
      t.name = c.name;
      t.lon = c.lon;
      t.lat = c.lat;
      t.population = c.population;
    }
    ++t.count;
    t.total_confidence += c.confidence;
  }
}

std::optional<EventLocation> resolve_from_tally(const LocationTally& tally) {
  const PlaceTally* best = nullptr;
  // Map order makes the smaller key win remaining ties.
  for (const auto& [key, t] : tally) {
    if (!best || t.count > best->count ||
        (t.count == best->count &&
         (t.total_confidence > best->total_confidence ||
          (t.total_confidence == best->total_confidence && t.population > best->population)))) {
      best = &t;
    }
  }
  if (!best || best->count == 0) return std::nullopt;
  const double conf = std::clamp(best->total_confidence / static_cast<double>(best->count), 1e-9, 1.0);
  return EventLocation{best->lon, best->lat, best->name, conf};
}

std::optional<EventLocation> resolve_event_location(std::span<const LocationSignal> members,
                                                    const Gazetteer& gazetteer) {
  LocationTally tally;
  for (const auto& m : members) add_candidates(tally, location_candidates(m, gazetteer));
  return resolve_from_tally(tally);
}

}  // namespace act::annotate
