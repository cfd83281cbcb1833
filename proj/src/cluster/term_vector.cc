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

#include "act/cluster/term_vector.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace act::cluster {

void CorpusStats::Add(std::span<const std::string> tokens) {
  ++doc_count;
  std::set<std::string_view> distinct(tokens.begin(), tokens.end());
  for (std::string_view t : distinct) {
    auto it = doc_freq.find(t);
    if (it == doc_freq.end()) {
      doc_freq.emplace(std::string(t), 1);
    } else {
      ++it->second;
    }
  }
}

TermVector tfidf_vector(std::span<const std::string> tokens, const CorpusStats& stats) {
  std::map<std::string, int64_t, std::less<>> tf;
  for (const auto& t : tokens) ++tf[t];
  TermVector v;
  const double n = static_cast<double>(stats.doc_count);
  for (const auto& [term, count] : tf) {
    auto it = stats.doc_freq.find(term);
    const double df = it == stats.doc_freq.end() ? 0.0 : static_cast<double>(it->second);
    v.emplace(term, static_cast<double>(count) * (std::log((1.0 + n) / (1.0 + df)) + 1.0));
  }
  return normalized(v);
}

double l2_norm(const TermVector& v) {
  double sq = 0.0;
  for (const auto& [term, w] : v) sq += w * w;
  return std::sqrt(sq);
}

double dot(const TermVector& a, const TermVector& b) {
  // Walk the shorter vector; either way the shared terms are visited in
  // key order, so the sum is the same.
  const TermVector& small = a.size() <= b.size() ? a : b;
  const TermVector& large = a.size() <= b.size() ? b : a;
  double sum = 0.0;
  for (const auto& [term, w] : small) {
    if (auto it = large.find(term); it != large.end()) sum += w * it->second;
  }
  return sum;
}

double cosine(const TermVector& a, double a_norm, const TermVector& b, double b_norm) {
  if (a.empty() || b.empty() || a_norm == 0.0 || b_norm == 0.0) return 0.0;
  return std::clamp(dot(a, b) / (a_norm * b_norm), 0.0, 1.0);
}

double cosine(const TermVector& a, const TermVector& b) {
  return cosine(a, l2_norm(a), b, l2_norm(b));
}

void add_into(TermVector& sum, const TermVector& v) {
  for (const auto& [term, w] : v) {
    auto it = sum.find(term);
    if (it == sum.end()) {
      sum.emplace(term, w);
    } else {
      it->second += w;
    }
  }
}

TermVector normalized(const TermVector& v) {
  const double norm = l2_norm(v);
  TermVector out;
  if (norm == 0.0) return out;
  for (const auto& [term, w] : v) {
    const double x = w / norm;
    if (x != 0.0) out.emplace_hint(out.end(), term, x);
  }
  return out;
}

}  // namespace act::cluster
