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
#include <set>
#include <string>

#include "act/annotate/category.h"
#include "act/common/geo.h"
#include "act/common/time.h"

namespace act::store {

struct BBox {
  double min_lon = -180.0;
  double min_lat = -90.0;
  double max_lon = 180.0;
  double max_lat = 90.0;

  bool Contains(const GeoPoint& p) const {
    return p.lon >= min_lon && p.lon <= max_lon && p.lat >= min_lat && p.lat <= max_lat;
  }
  bool operator==(const BBox&) const = default;
};

// The operator's current selection.
struct FilterQuery {
  static constexpr size_t kDefaultLimit = 100;
  static constexpr size_t kMaxLimit = 1000;

  std::optional<BBox> bbox;
  std::optional<std::set<annotate::Category>> categories;
  std::optional<std::string> keyword;  // one lowercase term
  std::optional<Timestamp> since;
  std::optional<Timestamp> until;
  std::optional<bool> geotagged;
  size_t limit = kDefaultLimit;

  // Throws InvalidArgument naming the offending field.
  void Validate() const;

  // With geotagged=false the map is not a filter: bbox is ignored.
  bool bbox_ignored() const { return bbox.has_value() && geotagged == false; }

  bool operator==(const FilterQuery&) const = default;
};

}  // namespace act::store
