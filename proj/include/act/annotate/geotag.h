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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "act/annotate/gazetteer.h"
#include "act/common/geo.h"

namespace act::annotate {

struct GeoTag {
  std::string place_name;
  double lon = 0.0;
  double lat = 0.0;
  double confidence = 0.0;  // (0, 1]
  int64_t population = 0;
  std::string country;

  bool operator==(const GeoTag&) const = default;
};

// Confidence of a gazetteer match covering `span_len` tokens:
// span_len / min(4, span_len + 1), capped at 1.
double span_confidence(size_t span_len);

// Scans every contiguous token span for a gazetteer name. The longest
// match wins; equal lengths go to the larger population, then the earlier
// position.
std::optional<GeoTag> geotag_text(std::span<const std::string> tokens, const Gazetteer& gazetteer);

// Everything one post says about where it is.
struct LocationSignal {
  std::optional<GeoTag> text_tag;
  std::optional<GeoPoint> native;
};

// One vote for a place. Gazetteer places are keyed "name|country"; raw
// coordinates that did not snap are keyed by their rounded position.
struct PlaceCandidate {
  std::string key;
  std::string name;
  double lon = 0.0;
  double lat = 0.0;
  int64_t population = 0;
  double confidence = 0.0;
};

// Native coordinates snap to the nearest gazetteer entry within this radius.
inline constexpr double kSnapRadiusKm = 50.0;

std::vector<PlaceCandidate> location_candidates(const LocationSignal& signal, const Gazetteer& gazetteer);

struct PlaceTally {
  std::string name;
  double lon = 0.0;
  double lat = 0.0;
  int64_t population = 0;
  int64_t count = 0;
  double total_confidence = 0.0;

  bool operator==(const PlaceTally&) const = default;
};

using LocationTally = std::map<std::string, PlaceTally>;

void add_candidates(LocationTally& tally, std::span<const PlaceCandidate> candidates);

struct EventLocation {
  double lon = 0.0;
  double lat = 0.0;
  std::string place_name;
  double confidence = 0.0;  // mean confidence of the winning place's votes

  GeoPoint point() const { return {lon, lat}; }
  bool operator==(const EventLocation&) const = default;
};

// Modal place by vote count; ties go to the higher total confidence, then
// the larger population, then the smaller key.
std::optional<EventLocation> resolve_from_tally(const LocationTally& tally);

// From-scratch resolution over all member signals.
std::optional<EventLocation> resolve_event_location(std::span<const LocationSignal> members,
                                                    const Gazetteer& gazetteer);

}  // namespace act::annotate
