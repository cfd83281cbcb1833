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
#include <span>
#include <string>

namespace act::cluster {

// Sparse term -> weight. Entries are never zero and always finite. The
// ordered map fixes summation order, which keeps every similarity score
// bit-for-bit reproducible.
using TermVector = std::map<std::string, double, std::less<>>;

struct CorpusStats {
  int64_t doc_count = 0;
  std::map<std::string, int64_t, std::less<>> doc_freq;

  // One more document; each distinct token bumps its document frequency.
  void Add(std::span<const std::string> tokens);

  bool operator==(const CorpusStats&) const = default;
};

// weight(t) = tf(t) * (ln((1 + N) / (1 + df(t))) + 1), then L2-normalized.
TermVector tfidf_vector(std::span<const std::string> tokens, const CorpusStats& stats);

double l2_norm(const TermVector& v);
double dot(const TermVector& a, const TermVector& b);

// dot / (|a| |b|), clamped to [0, 1]; 0 when either side is empty.
double cosine(const TermVector& a, const TermVector& b);

// Same as cosine() with norms supplied by the caller.
double cosine(const TermVector& a, double a_norm, const TermVector& b, double b_norm);

void add_into(TermVector& sum, const TermVector& v);
TermVector normalized(const TermVector& v);

}  // namespace act::cluster
