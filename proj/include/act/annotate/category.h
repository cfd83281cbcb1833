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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "act/common/files.h"

namespace act::annotate {

// Declaration order is the tie-break priority; kOther is the fallback.
enum class Category { kFire = 0, kFlood, kStorm, kEarthquake, kMedical, kOther };

inline constexpr size_t kCategoryCount = 6;
inline constexpr std::array<Category, 5> kCategoryPriority = {
    Category::kFire, Category::kFlood, Category::kStorm, Category::kEarthquake, Category::kMedical};

std::string_view to_string(Category c);
std::optional<Category> category_from_string(std::string_view s);

struct CategoryRules {
  std::array<std::set<std::string, std::less<>>, 5> keywords;  // indexed by Category

  const std::set<std::string, std::less<>>& keywords_for(Category c) const;

  // Same content as data/rules/categories.json.
  static CategoryRules Defaults();
  // JSON object category -> [keywords]. Unknown categories are rejected;
  // categories left out keep no keywords.
  static CategoryRules FromJson(const Json& j);
  static CategoryRules Load(const std::filesystem::path& path);
  Json ToJson() const;
};

// First category in priority order with any keyword hit, else kOther.
Category categorize_post(std::span<const std::string> tokens, const CategoryRules& rules);

using CategoryVotes = std::array<int64_t, kCategoryCount>;

// Plurality over non-other votes, priority order on ties; kOther only when
// every vote is other (or there are none).
Category category_from_votes(const CategoryVotes& votes);

Category categorize_event(std::span<const Category> member_categories);

}  // namespace act::annotate
