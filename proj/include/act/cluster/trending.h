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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "act/cluster/event.h"

namespace act::cluster {

using TermCount = std::pair<std::string, int64_t>;

// Sums term_counts over `selection`; top `k` by count, ties in
// lexicographic order. The weight is the raw count.
std::vector<TermCount> trending_terms(std::span<const Event* const> selection, size_t k);

// Top `k` terms of one event under the same ordering.
std::vector<TermCount> top_terms(const Event& e, size_t k);

}  // namespace act::cluster
