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
#include <random>
#include <span>
#include <string>
#include <vector>

#include "act/common/files.h"
#include "act/ingest/source.h"

namespace act::ingest {

struct SyntheticOptions {
  uint64_t seed = 42;
  uint64_t count = 100;
  Timestamp start = Timestamp{std::chrono::sys_days{std::chrono::year{2013} / 10 / 17}};
  int64_t mean_gap_secs = 45;
};

struct SyntheticPlace {
  const char* name;
  double lon;
  double lat;
};

// Places the generator mentions; the shipped gazetteer covers all of them.
std::span<const SyntheticPlace> synthetic_places();

// Accounts the generator uses for official posts.
std::span<const char* const> synthetic_agencies();

// Seeded stream of disaster chatter: incident reports, agency warnings,
// retweets, angry posts, spam/jokes/songs, duplicate floods, off-topic
// chatter and a small share of out-of-order timestamps. Only raw
// mt19937_64 output is used, so a seed yields the same sequence on every
// standard library.
class SyntheticSource final : public PostSource {
 public:
  explicit SyntheticSource(SyntheticOptions opts);

  std::optional<RawPost> Next() override;
  std::string Describe() const override;

 private:
  struct Incident {
    int hazard;
    int place;
    Timestamp ends;
  };

  uint64_t Pick(uint64_t n) { return rng_() % n; }
  bool Chance(int percent) { return Pick(100) < static_cast<uint64_t>(percent); }
  const Incident& ActiveIncident();
  std::string Fill(std::string_view tmpl, const Incident& inc);
  std::string User();

  SyntheticOptions opts_;
  std::mt19937_64 rng_;
  uint64_t emitted_ = 0;
  Timestamp clock_;
  std::vector<Incident> incidents_;
  RawPost last_report_;
  bool have_last_report_ = false;
};

// Media corpus lines (JSON objects with id, url, caption, created_at and
// optional coordinates) spread over `hours` from `start`.
std::vector<Json> synthetic_media_records(uint64_t seed, uint64_t count, Timestamp start, int hours,
                                          const std::string& id_prefix);

}  // namespace act::ingest
