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

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "act/cluster/related.h"
#include "act/cluster/trending.h"
#include "act/common/files.h"
#include "act/media/finder.h"
#include "act/service/config.h"
#include "act/service/snapshot.h"
#include "act/store/filter_query.h"

namespace act::service {

using QueryParams = std::multimap<std::string, std::string>;

struct ApiResponse {
  int status = 200;
  Json body;
  std::map<std::string, std::string> headers;
};

inline constexpr size_t kDefaultTermsK = 50;
inline constexpr size_t kDefaultRelatedK = 5;
inline constexpr size_t kDefaultMediaK = 12;
inline constexpr size_t kDefaultAgencyLimit = 50;
inline constexpr size_t kMaxK = 1000;

// Parses the shared /events and /terms filter parameters. Throws
// InvalidArgument naming the parameter.
store::FilterQuery parse_filter_query(const QueryParams& params);

Json event_summary_json(const cluster::Event& e);
Json event_detail_json(const Snapshot& snap, const cluster::Event& e);
Json related_json(std::span<const cluster::RelatedEvent> related);
Json media_json(std::span<const media::RankedMedia> media);
Json terms_json(std::span<const cluster::TermCount> terms);
Json agency_post_json(const parse::Post& p);

// Read-only handlers over the snapshot current at call time. A request
// sees exactly one snapshot.
class Api {
 public:
  Api(const SnapshotPublisher& publisher, annotate::CategoryRules category_rules, media::MediaWeights media_weights);

  // Routes a GET request by path.
  ApiResponse Get(std::string_view path, const QueryParams& params) const;

  ApiResponse Events(const Snapshot& snap, const QueryParams& params) const;
  ApiResponse EventDetail(const Snapshot& snap, std::string_view id, const QueryParams& params) const;
  ApiResponse Related(const Snapshot& snap, std::string_view id, const QueryParams& params) const;
  ApiResponse Media(const Snapshot& snap, std::string_view id, const QueryParams& params) const;
  ApiResponse Terms(const Snapshot& snap, const QueryParams& params) const;
  ApiResponse Agencies(const Snapshot& snap, const QueryParams& params) const;
  ApiResponse Health(const Snapshot& snap, const QueryParams& params) const;

  std::shared_ptr<const Snapshot> snapshot() const { return publisher_.Current(); }

 private:
  struct CachedMedia {
    uint64_t revision = 0;
    uint64_t media_version = 0;
    std::shared_ptr<const media::MediaIndex> index;
    std::vector<media::RankedMedia> ranked;  // full k=kMaxK ranking
  };

  std::vector<media::RankedMedia> RankedMediaFor(const Snapshot& snap, const cluster::Event& e) const;

  const SnapshotPublisher& publisher_;
  annotate::CategoryRules category_rules_;
  media::MediaWeights media_weights_;
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<std::string, CachedMedia> media_cache_;
};

ApiResponse error_response(int status, std::string_view field, std::string_view message);

}  // namespace act::service
