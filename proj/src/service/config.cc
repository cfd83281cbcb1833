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

#include "act/service/config.h"

#include <toml.hpp>

#include <set>

#include "act/common/errors.h"
#include "act/common/files.h"

namespace act::service {

namespace fs = std::filesystem;

namespace {

class Reader {
 public:
  Reader(const toml::table& root, fs::path base) : root_(root), base_(std::move(base)) {}

  template <typename T>
  std::optional<T> Get(const std::string& key) const {
    const toml::node* node = root_.at_path(key).node();
    if (!node) return std::nullopt;
    if constexpr (std::is_same_v<T, double>) {
      if (auto v = node->value<double>()) return *v;
      throw InvalidArgument(key, "expected a number");
    } else if constexpr (std::is_same_v<T, int64_t>) {
      if (auto v = node->as_integer()) return v->get();
      throw InvalidArgument(key, "expected an integer");
    } else if constexpr (std::is_same_v<T, bool>) {
      if (auto v = node->as_boolean()) return v->get();
      throw InvalidArgument(key, "expected true or false");
    } else {
      if (auto v = node->as_string()) return v->get();
      throw InvalidArgument(key, "expected a string");
    }
  }

  fs::path Path(const std::string& key) const {
    auto s = Get<std::string>(key);
    if (!s || s->empty()) return {};
    fs::path p(*s);
    return p.is_absolute() ? p : (base_ / p).lexically_normal();
  }

  std::set<std::string> Strings(const std::string& key) const {
    std::set<std::string> out;
    const toml::node* node = root_.at_path(key).node();
    if (!node) return out;
    const toml::array* arr = node->as_array();
    if (!arr) throw InvalidArgument(key, "expected an array of strings");
    for (const auto& item : *arr) {
      auto s = item.value<std::string>();
      if (!s) throw InvalidArgument(key, "expected an array of strings");
      out.insert(*s);
    }
    return out;
  }

 private:
  const toml::table& root_;
  fs::path base_;
};

void check_file(std::vector<std::string>& problems, const char* key, const fs::path& p, bool required) {
  if (p.empty()) {
    if (required) problems.push_back(std::string(key) + ": missing");
    return;
  }
  if (!fs::is_regular_file(p)) problems.push_back(std::string(key) + ": file not found: " + p.string());
}

template <typename Fn>
void check_parses(std::vector<std::string>& problems, const char* key, const fs::path& p, Fn&& fn) {
  if (p.empty() || !fs::is_regular_file(p)) return;
  try {
    fn();
  } catch (const std::exception& e) {
    problems.push_back(std::string(key) + ": " + e.what());
  }
}

}  // namespace

ApiConfig load_config(const fs::path& path) {
  if (!fs::is_regular_file(path)) throw IoError("config file not found: " + path.string());
  toml::table root;
  try {
    root = toml::parse_file(path.string());
  } catch (const toml::parse_error& e) {
    throw InvalidArgument("config", std::string(e.description()) + " at line " +
                                        std::to_string(e.source().begin.line));
  }
  const Reader r(root, fs::absolute(path).parent_path());

  ApiConfig cfg;
  cfg.source = path;
  if (auto v = r.Get<std::string>("server.bind")) cfg.bind = *v;
  if (auto v = r.Get<int64_t>("server.port")) {
    if (*v < 1 || *v > 65535) throw InvalidArgument("server.port", "must be in [1, 65535]");
    cfg.port = static_cast<int>(*v);
  }
  if (auto v = r.Get<std::string>("server.cors_origin")) cfg.cors_origin = *v;

  cfg.paths.corpus = r.Path("paths.corpus");
  cfg.paths.media_corpus = r.Path("paths.media_corpus");
  cfg.paths.remote_media = r.Path("paths.remote_media");
  cfg.paths.gazetteer = r.Path("paths.gazetteer");
  cfg.paths.sentiment_lexicon = r.Path("paths.sentiment_lexicon");
  cfg.paths.anger_terms = r.Path("paths.anger_terms");
  cfg.paths.category_rules = r.Path("paths.category_rules");
  cfg.paths.noise_rules = r.Path("paths.noise_rules");
  cfg.paths.stopwords = r.Path("paths.stopwords");
  cfg.paths.store_dir = r.Path("paths.store_dir");

  auto& p = cfg.pipeline;
  if (auto v = r.Get<double>("pipeline.theta")) p.theta = *v;
  if (auto v = r.Get<double>("pipeline.window_hours")) p.window_hours = *v;
  if (auto v = r.Get<int64_t>("pipeline.snapshot_batch")) {
    if (*v < 1) throw InvalidArgument("pipeline.snapshot_batch", "must be >= 1");
    p.snapshot_batch = static_cast<size_t>(*v);
  }
  if (auto v = r.Get<double>("pipeline.anger_threshold")) p.anger_threshold = *v;
  if (auto v = r.Get<int64_t>("pipeline.queue_capacity")) {
    if (*v < 1) throw InvalidArgument("pipeline.queue_capacity", "must be >= 1");
    p.queue_capacity = static_cast<size_t>(*v);
  }
  if (auto v = r.Get<bool>("pipeline.store_sync")) p.store_sync = *v;
  if (!(p.theta > 0.0 && p.theta <= 1.0)) throw InvalidArgument("pipeline.theta", "must be in (0, 1]");
  if (!(p.window_hours > 0.0)) throw InvalidArgument("pipeline.window_hours", "must be > 0");
  if (!(p.anger_threshold >= 0.0 && p.anger_threshold <= 1.0)) {
    throw InvalidArgument("pipeline.anger_threshold", "must be in [0, 1]");
  }

  auto& m = cfg.media;
  if (auto v = r.Get<double>("media.w_content")) m.content = *v;
  if (auto v = r.Get<double>("media.w_geo")) m.geo = *v;
  if (auto v = r.Get<double>("media.w_time")) m.time = *v;
  if (auto v = r.Get<double>("media.min_score")) m.min_score = *v;
  for (auto [key, value] : {std::pair{"media.w_content", m.content}, std::pair{"media.w_geo", m.geo},
                            std::pair{"media.w_time", m.time}, std::pair{"media.min_score", m.min_score}}) {
    if (!(value >= 0.0 && value <= 1.0)) throw InvalidArgument(key, "must be in [0, 1]");
  }

  double speed = 0.0;
  if (auto v = r.Get<double>("track.replay_speed")) speed = *v;
  cfg.track = ingest::TrackConfig::Make(r.Strings("track.accounts"), r.Strings("track.keywords"), speed);
  try {
    cfg.track.Validate();
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(e.field() == "track" ? "track" : "track." + e.field(), e.what());
  }
  return cfg;
}

std::vector<std::string> validate_config(const ApiConfig& cfg) {
  std::vector<std::string> problems;
  if (cfg.port < 1 || cfg.port > 65535) problems.push_back("server.port: must be in [1, 65535]");
  const auto& p = cfg.paths;
  check_file(problems, "paths.corpus", p.corpus, false);
  check_file(problems, "paths.media_corpus", p.media_corpus, true);
  check_file(problems, "paths.remote_media", p.remote_media, false);
  check_file(problems, "paths.gazetteer", p.gazetteer, true);
  check_file(problems, "paths.sentiment_lexicon", p.sentiment_lexicon, true);
  check_file(problems, "paths.anger_terms", p.anger_terms, true);
  check_file(problems, "paths.category_rules", p.category_rules, true);
  check_file(problems, "paths.noise_rules", p.noise_rules, true);
  check_file(problems, "paths.stopwords", p.stopwords, true);
  if (p.store_dir.empty()) {
    problems.push_back("paths.store_dir: missing");
  } else if (fs::exists(p.store_dir) && !fs::is_directory(p.store_dir)) {
    problems.push_back("paths.store_dir: not a directory: " + p.store_dir.string());
  }

  check_parses(problems, "paths.gazetteer", p.gazetteer, [&] { annotate::Gazetteer::Load(p.gazetteer); });
  check_parses(problems, "paths.sentiment_lexicon", p.sentiment_lexicon, [&] {
    if (fs::is_regular_file(p.anger_terms)) annotate::SentimentLexicon::Load(p.sentiment_lexicon, p.anger_terms);
  });
  check_parses(problems, "paths.category_rules", p.category_rules,
               [&] { annotate::CategoryRules::Load(p.category_rules); });
  check_parses(problems, "paths.noise_rules", p.noise_rules, [&] { parse::NoiseRules::Load(p.noise_rules); });
  check_parses(problems, "paths.media_corpus", p.media_corpus, [&] {
    media::IndexReport report;
    media::index_media(p.media_corpus, &report);
    if (report.skipped > 0) throw InvalidArgument("media", std::to_string(report.skipped) + " malformed lines");
  });
  return problems;
}

Resources load_resources(const ApiConfig& cfg) {
  Resources r;
  r.stopwords = parse::load_stopwords(cfg.paths.stopwords);
  r.noise_rules = parse::NoiseRules::Load(cfg.paths.noise_rules);
  r.gazetteer = std::make_shared<annotate::Gazetteer>(annotate::Gazetteer::Load(cfg.paths.gazetteer, r.stopwords));
  r.category_rules = annotate::CategoryRules::Load(cfg.paths.category_rules);
  r.lexicon = annotate::SentimentLexicon::Load(cfg.paths.sentiment_lexicon, cfg.paths.anger_terms);
  auto index = std::make_shared<media::MediaIndex>();
  r.media_report = index->AddCorpus(cfg.paths.media_corpus, media::MediaOrigin::kLocalCorpus, r.stopwords);
  r.media_index = std::move(index);
  return r;
}

cluster::ClusterParams cluster_params(const PipelineParams& p) {
  cluster::ClusterParams c;
  c.theta = p.theta;
  c.window = Seconds(static_cast<int64_t>(p.window_hours * 3600.0));
  return c;
}

}  // namespace act::service
