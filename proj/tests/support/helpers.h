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

#include <filesystem>
#include <optional>
#include <random>
#include <thread>
#include <span>
#include <string>
#include <vector>

#include "act/annotate/annotator.h"
#include "act/common/geo.h"
#include "act/common/time.h"
#include "act/ingest/raw_post.h"
#include "act/parse/post.h"
#include "act/service/api.h"
#include "act/service/config.h"
#include "act/service/http_server.h"
#include "act/service/pipeline.h"

namespace act::testing {

std::filesystem::path source_dir();
std::filesystem::path data_path(const std::string& relative);
std::filesystem::path fixture_path(const std::string& relative);

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix = "act-test");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

Timestamp ts(const std::string& iso);
Timestamp t0();  // 2013-10-17T00:00:00Z

ingest::RawPost raw(const std::string& id, const std::string& text, Timestamp at,
                    const std::string& author = "someone", std::optional<GeoPoint> coords = std::nullopt);

// Parses with the default stopword list and no agency accounts.
parse::Post post(const std::string& id, const std::string& text, Timestamp at,
                 const std::string& author = "someone", std::optional<GeoPoint> coords = std::nullopt);

std::vector<ingest::RawPost> read_raw_corpus(const std::filesystem::path& path);

// Parsed posts ready for clustering: records without tokens and repeated
// ids are left out.
std::vector<parse::Post> clusterable_posts(const std::vector<ingest::RawPost>& raws);
std::vector<parse::Post> clusterable_posts(const std::filesystem::path& corpus);

void write_text(const std::filesystem::path& path, const std::string& content);

// Gazetteer, rules and lexicons shipped under data/.
std::shared_ptr<const annotate::Gazetteer> shipped_gazetteer();
annotate::SentimentLexicon shipped_lexicon();

// The shipped config/act.toml and the resources it names, loaded once.
const service::ApiConfig& shipped_config();
std::shared_ptr<const service::Resources> shipped_resources();

// A pipeline over the shipped resources that has processed the first
// `count` records of the shipped 5000-post corpus (all of them when 0).
std::unique_ptr<service::Pipeline> replayed_pipeline(size_t count = 0, store::SegmentLog* log = nullptr);

// A valid random FilterQuery drawn around the given events: keywords come
// from their terms, times from their spans, boxes from two-decimal
// coordinates so the query survives a round trip through text.
store::FilterQuery random_filter_query(std::mt19937_64& rng, std::span<const cluster::Event* const> events);

// The query parameters that parse back to `q`.
service::QueryParams to_params(const store::FilterQuery& q);

// An HTTP server on a free loopback port, serving until destroyed.
class TestServer {
 public:
  TestServer(const service::SnapshotPublisher& publisher, const service::ApiConfig& cfg);
  ~TestServer();

  const service::Api& api() const { return api_; }
  int port() const { return port_; }

 private:
  service::Api api_;
  service::HttpServer server_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace act::testing
