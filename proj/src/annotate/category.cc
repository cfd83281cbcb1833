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

#include "act/annotate/category.h"

#include "act/common/errors.h"
#include "act/common/utf8.h"

namespace act::annotate {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::kFire: return "fire";
    case Category::kFlood: return "flood";
    case Category::kStorm: return "storm";
    case Category::kEarthquake: return "earthquake";
    case Category::kMedical: return "medical";
    case Category::kOther: return "other";
  }
  return "other";
}

std::optional<Category> category_from_string(std::string_view s) {
  for (size_t i = 0; i < kCategoryCount; ++i) {
    const auto c = static_cast<Category>(i);
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

const std::set<std::string, std::less<>>& CategoryRules::keywords_for(Category c) const {
  static const std::set<std::string, std::less<>> kNone;
  return c == Category::kOther ? kNone : keywords[static_cast<size_t>(c)];
}

CategoryRules CategoryRules::Defaults() {
  CategoryRules r;
  r.keywords[0] = {"fire", "bushfire", "blaze", "smoke"};
  r.keywords[1] = {"flood", "flooding", "inundated"};
  r.keywords[2] = {"storm", "hurricane", "cyclone", "hail"};
  r.keywords[3] = {"earthquake", "quake", "tremor"};
  r.keywords[4] = {"ambulance", "injured", "casualty"};
  return r;
}

CategoryRules CategoryRules::FromJson(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("category_rules", "expected a JSON object");
  CategoryRules r;
  for (const auto& [name, list] : j.items()) {
    const auto cat = category_from_string(name);
    if (!cat || *cat == Category::kOther) {
      throw InvalidArgument("category_rules." + name, "unknown category");
    }
    if (!list.is_array()) throw InvalidArgument("category_rules." + name, "expected an array");
    for (const auto& kw : list) {
      if (!kw.is_string()) throw InvalidArgument("category_rules." + name, "keywords must be strings");
      r.keywords[static_cast<size_t>(*cat)].insert(utf8::to_lower(kw.get<std::string>()));
    }
  }
  return r;
}

CategoryRules CategoryRules::Load(const std::filesystem::path& path) {
  return FromJson(read_json_file(path));
}

Json CategoryRules::ToJson() const {
  Json j = Json::object();
  for (Category c : kCategoryPriority) j[std::string(to_string(c))] = keywords_for(c);
  return j;
}

Category categorize_post(std::span<const std::string> tokens, const CategoryRules& rules) {
  for (Category c : kCategoryPriority) {
    const auto& kws = rules.keywords_for(c);
    for (const auto& t : tokens) {
      if (kws.contains(t)) return c;
    }
  }
  return Category::kOther;
}

Category category_from_votes(const CategoryVotes& votes) {
  Category best = Category::kOther;
  int64_t best_votes = 0;
  for (Category c : kCategoryPriority) {
    const int64_t v = votes[static_cast<size_t>(c)];
    if (v > best_votes) {
      best = c;
      best_votes = v;
    }
  }
  return best;
}

Category categorize_event(std::span<const Category> member_categories) {
  CategoryVotes votes{};
  for (Category c : member_categories) ++votes[static_cast<size_t>(c)];
  return category_from_votes(votes);
}

}  // namespace act::annotate
