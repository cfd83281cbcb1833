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

#include "helpers.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "act/common/errors.h"
#include "act/common/files.h"
#include "act/parse/stopwords.h"

namespace act::testing {

namespace fs = std::filesystem;

fs::path source_dir() { return ACT_SOURCE_DIR; }
fs::path data_path(const std::string& relative) { return source_dir() / "data" / relative; }
fs::path fixture_path(const std::string& relative) { return source_dir() / "tests" / "fixtures" / relative; }

TempDir::TempDir(const std::string& prefix) {
  static std::atomic<uint64_t> counter{0};
  std::random_device rd;
  for (int attempt = 0; attempt < 100; ++attempt) {
    fs::path p = fs::temp_directory_path() /
                 (prefix + "-" + std::to_string(rd()) + "-" + std::to_string(counter.fetch_add(1)));
    if (fs::create_directory(p)) {
      path_ = p;
      return;
    }
  }
  throw IoError("cannot create a temp dir");
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

Timestamp ts(const std::string& iso) { return parse_timestamp(iso); }
Timestamp t0() { return ts("2013-10-17T00:00:00Z"); }

ingest::RawPost raw(const std::string& id, const std::string& text, Timestamp at, const std::string& author,
                    std::optional<GeoPoint> coords) {
  ingest::RawPost r;
  r.id = id;
  r.text = text;
  r.created_at = at;
  r.author = author;
  r.coords = coords;
  return r;
}

parse::Post post(const std::string& id, const std::string& text, Timestamp at, const std::string& author,
                 std::optional<GeoPoint> coords) {
  static const parse::Parser parser(parse::default_stopwords(), {});
  return parser.parse(raw(id, text, at, author, coords));
}

std::vector<ingest::RawPost> read_raw_corpus(const fs::path& path) {
  std::vector<ingest::RawPost> out;
  for (const auto& line : read_lines(path)) {
    if (trim(line).empty()) continue;
    out.push_back(ingest::parse_raw_post_line(line, ingest::SourceTag::kReplay));
  }
  return out;
}

std::vector<parse::Post> clusterable_posts(const std::vector<ingest::RawPost>& raws) {
  const parse::Parser parser(parse::default_stopwords(), {});
  std::set<std::string> seen;
  std::vector<parse::Post> out;
  for (const auto& r : raws) {
    parse::Post p = parser.parse(r);
    if (p.tokens.empty() || !seen.insert(p.id).second) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<parse::Post> clusterable_posts(const fs::path& corpus) { return clusterable_posts(read_raw_corpus(corpus)); }

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw IoError("cannot write " + path.string());
}

std::shared_ptr<const annotate::Gazetteer> shipped_gazetteer() {
  static const auto g = std::make_shared<const annotate::Gazetteer>(annotate::Gazetteer::Load(data_path("gazetteer.csv")));
  return g;
}

annotate::SentimentLexicon shipped_lexicon() {
  return annotate::SentimentLexicon::Load(data_path("lexicon/sentiment.csv"), data_path("lexicon/anger.txt"));
}

const service::ApiConfig& shipped_config() {
  static const service::ApiConfig cfg = service::load_config(source_dir() / "config" / "act.toml");
  return cfg;
}

std::shared_ptr<const service::Resources> shipped_resources() {
  static const auto r = std::make_shared<const service::Resources>(service::load_resources(shipped_config()));
  return r;
}

std::unique_ptr<service::Pipeline> replayed_pipeline(size_t count, store::SegmentLog* log) {
  static const std::vector<ingest::RawPost> corpus = read_raw_corpus(data_path("corpus/synthetic_5000.jsonl"));
  const auto& cfg = shipped_config();
  auto p = std::make_unique<service::Pipeline>(shipped_resources(), cfg.track, service::pipeline_options(cfg), log);
  const size_t n = count == 0 ? corpus.size() : std::min(count, corpus.size());
  for (size_t i = 0; i < n; ++i) p->Process(corpus[i]);
  p->Publish();
  return p;
}

store::FilterQuery random_filter_query(std::mt19937_64& rng, std::span<const cluster::Event* const> events) {
  auto chance = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };
  auto pick = [&](size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); };
  auto coord = [&](double lo, double hi) {
    return static_cast<double>(std::uniform_int_distribution<int>(static_cast<int>(lo * 100), static_cast<int>(hi * 100))(rng)) / 100.0;
  };

  store::FilterQuery q;
  if (chance(0.4)) {
    double a = coord(110, 160), b = coord(110, 160), c = coord(-45, -8), d = coord(-45, -8);
    q.bbox = store::BBox{std::min(a, b), std::min(c, d), std::max(a, b), std::max(c, d)};
  }
  if (chance(0.3)) {
    std::set<annotate::Category> cats;
    const size_t n = 1 + pick(3);
    for (size_t i = 0; i < n; ++i) cats.insert(static_cast<annotate::Category>(pick(annotate::kCategoryCount)));
    q.categories = cats;
  }
  if (chance(0.35)) {
    if (!events.empty() && chance(0.85)) {
      const auto& terms = events[pick(events.size())]->term_counts;
      if (!terms.empty()) {
        auto it = terms.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(pick(terms.size())));
        q.keyword = it->first;
      }
    } else {
      q.keyword = "zzznothing";
    }
  }
  if (!events.empty()) {
    Timestamp lo = events[0]->first_seen, hi = events[0]->last_seen;
    for (const auto* e : events) {
      lo = std::min(lo, e->first_seen);
      hi = std::max(hi, e->last_seen);
    }
    const int64_t span = std::chrono::duration_cast<Seconds>(hi - lo).count() + 7200;
    auto at = [&] { return lo - std::chrono::hours(1) + Seconds(std::uniform_int_distribution<int64_t>(0, span)(rng)); };
    if (chance(0.35)) q.since = at();
    if (chance(0.35)) q.until = at();
    if (q.since && q.until && *q.since > *q.until) std::swap(*q.since, *q.until);
  }
  const size_t g = pick(4);
  if (g == 1) q.geotagged = true;
  if (g == 2) q.geotagged = false;
  static constexpr size_t kLimits[] = {1, 3, 10, 50, 100, 1000};
  q.limit = chance(0.5) ? kLimits[pick(std::size(kLimits))] : 1 + pick(store::FilterQuery::kMaxLimit);
  return q;
}

service::QueryParams to_params(const store::FilterQuery& q) {
  service::QueryParams p;
  if (q.bbox) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f,%.2f,%.2f", q.bbox->min_lon, q.bbox->min_lat, q.bbox->max_lon,
                  q.bbox->max_lat);
    p.emplace("bbox", buf);
  }
  if (q.categories) {
    std::string joined;
    for (auto c : *q.categories) {
      if (!joined.empty()) joined += ",";
      joined += annotate::to_string(c);
    }
    p.emplace("category", joined);
  }
  if (q.keyword) p.emplace("q", *q.keyword);
  if (q.since) p.emplace("since", format_timestamp(*q.since));
  if (q.until) p.emplace("until", format_timestamp(*q.until));
  if (q.geotagged) p.emplace("geotagged", *q.geotagged ? "true" : "false");
  p.emplace("limit", std::to_string(q.limit));
  return p;
}

TestServer::TestServer(const service::SnapshotPublisher& publisher, const service::ApiConfig& cfg)
    : api_(publisher, annotate::CategoryRules::Defaults(), cfg.media),
      server_(api_, service::HttpOptions{"127.0.0.1", 0, cfg.cors_origin, 4}) {
  port_ = server_.Bind();
  thread_ = std::thread([this] { server_.Serve(); });
  server_.WaitUntilReady();
}

TestServer::~TestServer() {
  server_.Stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace act::testing
