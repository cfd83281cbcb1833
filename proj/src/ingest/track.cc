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

#include "act/ingest/track.h"

#include "act/common/errors.h"
#include "act/common/utf8.h"
#include "act/parse/tokenizer.h"

namespace act::ingest {

void TrackConfig::Validate() const {
  if (accounts.empty() && keywords.empty()) {
    throw InvalidArgument("track", "at least one of accounts/keywords must be non-empty");
  }
  for (const auto& k : keywords) {
    if (k.empty() || utf8::to_lower(k) != k) {
      throw InvalidArgument("track.keywords", "keyword '" + k + "' must be a non-empty lowercase term");
    }
  }
  if (!(replay_speed >= 0.0)) throw InvalidArgument("replay_speed", "must be >= 0");
}

TrackConfig TrackConfig::Make(const std::set<std::string>& accounts,
                              const std::set<std::string>& keywords, double replay_speed) {
  TrackConfig cfg;
  for (const auto& a : accounts) cfg.accounts.insert(utf8::to_lower(a));
  for (const auto& k : keywords) cfg.keywords.insert(utf8::to_lower(k));
  cfg.replay_speed = replay_speed;
  return cfg;
}

bool matches_track(const RawPost& raw, const TrackConfig& cfg) {
  if (!cfg.accounts.empty() && cfg.accounts.contains(utf8::to_lower(raw.author))) return true;
  if (cfg.keywords.empty()) return false;
  for (const auto& term : parse::split_terms(raw.text)) {
    if (cfg.keywords.contains(term)) return true;
  }
  return false;
}

}  // namespace act::ingest
