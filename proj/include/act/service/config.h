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
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "act/annotate/annotator.h"
#include "act/cluster/clusterer.h"
#include "act/ingest/track.h"
#include "act/media/finder.h"
#include "act/media/media_index.h"
#include "act/parse/noise.h"
#include "act/parse/stopwords.h"

namespace act::service {

struct ResourcePaths {
  std::filesystem::path corpus;  // optional for `serve`
  std::filesystem::path media_corpus;
  std::filesystem::path remote_media;  // optional replay of the remote photo source
  std::filesystem::path gazetteer;
  std::filesystem::path sentiment_lexicon;
  std::filesystem::path anger_terms;
  std::filesystem::path category_rules;
  std::filesystem::path noise_rules;
  std::filesystem::path stopwords;
  std::filesystem::path store_dir;  // created when missing
};

struct PipelineParams {
  double theta = 0.5;
  double window_hours = 6.0;
  size_t snapshot_batch = 50;
  double anger_threshold = annotate::kDefaultAngerThreshold;
  size_t queue_capacity = 1024;
  bool store_sync = false;
};

struct ApiConfig {
  std::filesystem::path source;  // the config file itself
  std::string bind = "127.0.0.1";
  int port = 8080;
  std::string cors_origin = "*";
  ResourcePaths paths;
  PipelineParams pipeline;
  media::MediaWeights media;
  ingest::TrackConfig track;
};

// Parses a TOML config. Relative paths resolve against the file's
// directory. Throws IoError, or InvalidArgument naming the dotted key.
ApiConfig load_config(const std::filesystem::path& path);

// Every problem with a parsed config, as "key: message" lines; empty when
// the config is usable. Checks that referenced files exist and parse.
std::vector<std::string> validate_config(const ApiConfig& cfg);

// Read-only inputs shared by the pipeline and request handlers.
struct Resources {
  parse::StopwordSet stopwords;
  parse::NoiseRules noise_rules;
  std::shared_ptr<const annotate::Gazetteer> gazetteer;
  annotate::CategoryRules category_rules;
  annotate::SentimentLexicon lexicon;
  std::shared_ptr<const media::MediaIndex> media_index;
  media::IndexReport media_report;
};

Resources load_resources(const ApiConfig& cfg);

cluster::ClusterParams cluster_params(const PipelineParams& p);

}  // namespace act::service
