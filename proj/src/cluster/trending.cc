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

#include "act/cluster/trending.h"

#include <algorithm>
#include <map>

namespace act::cluster {

namespace {

std::vector<TermCount> top_k(const std::map<std::string, int64_t, std::less<>>& totals, size_t k) {
  std::vector<TermCount> all(totals.begin(), totals.end());
  auto better = [](const TermCount& a, const TermCount& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  const size_t n = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n), all.end(), better);
  all.resize(n);
  return all;
}

}  // namespace

std::vector<TermCount> trending_terms(std::span<const Event* const> selection, size_t k) {
  std::map<std::string, int64_t, std::less<>> totals;
  for (const Event* e : selection) {
    for (const auto& [term, count] : e->term_counts) totals[term] += count;
  }
  return top_k(totals, k);
}

std::vector<TermCount> top_terms(const Event& e, size_t k) { return top_k(e.term_counts, k); }

}  // namespace act::cluster
