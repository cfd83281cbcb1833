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

#include "act/store/filter_query.h"

#include <cmath>

#include "act/common/errors.h"
#include "act/common/utf8.h"

namespace act::store {

void FilterQuery::Validate() const {
  if (bbox) {
    const BBox& b = *bbox;
    if (!std::isfinite(b.min_lon) || !std::isfinite(b.min_lat) || !std::isfinite(b.max_lon) ||
        !std::isfinite(b.max_lat) || !valid_coordinates(b.min_lon, b.min_lat) ||
        !valid_coordinates(b.max_lon, b.max_lat)) {
      throw InvalidArgument("bbox", "coordinates out of range");
    }
    if (b.min_lon > b.max_lon) throw InvalidArgument("bbox", "min_lon must be <= max_lon");
    if (b.min_lat > b.max_lat) throw InvalidArgument("bbox", "min_lat must be <= max_lat");
  }
  if (keyword) {
    if (keyword->empty()) throw InvalidArgument("q", "must be non-empty");
    if (utf8::to_lower(*keyword) != *keyword) throw InvalidArgument("q", "must be lowercase");
    if (keyword->find_first_of(" \t\r\n") != std::string::npos) {
      throw InvalidArgument("q", "must be a single term");
    }
  }
  if (since && until && *since > *until) throw InvalidArgument("since", "must be <= until");
  if (limit < 1 || limit > kMaxLimit) {
    throw InvalidArgument("limit", "must be between 1 and " + std::to_string(kMaxLimit));
  }
}

}  // namespace act::store
