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

// Command-line entry point: serve, replay, validate-config, generate.

#include <signal.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "act/common/errors.h"
#include "act/ingest/source.h"
#include "act/ingest/synthetic.h"
#include "act/service/api.h"
#include "act/service/config.h"
#include "act/service/export.h"
#include "act/service/http_server.h"
#include "act/service/pipeline.h"
#include "act/store/segment_log.h"

namespace fs = std::filesystem;
using namespace act;

namespace {

std::string resolve_config(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("ACT_CONFIG"); env && *env) return env;
  if (fs::exists("config/act.toml")) return "config/act.toml";
#ifdef ACT_DEFAULT_CONFIG
  if (fs::exists(ACT_DEFAULT_CONFIG)) return ACT_DEFAULT_CONFIG;
#endif
  throw InvalidArgument("config", "no --config given and ACT_CONFIG is not set");
}

service::ApiConfig load_valid_config(const std::string& flag) {
  const std::string path = resolve_config(flag);
  service::ApiConfig cfg = service::load_config(path);
  auto problems = service::validate_config(cfg);
  if (!problems.empty()) {
    for (const auto& p : problems) std::cerr << path << ": " << p << "\n";
    throw InvalidArgument(problems.front().substr(0, problems.front().find(':')), "invalid configuration");
  }
  return cfg;
}

// Blocks SIGINT/SIGTERM in every thread started afterwards, so the main
// thread can wait for them with sigwait.
sigset_t block_stop_signals() {
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);
  return set;
}

void wait_for_stop(const sigset_t& set) {
  int sig = 0;
  sigwait(&set, &sig);
  spdlog::info("received signal {}, shutting down", sig);
}

void add_remote_media(service::Pipeline& pipeline, const service::ApiConfig& cfg,
                      const service::Resources& res) {
  if (cfg.paths.remote_media.empty()) return;
  media::ReplayMediaSource remote(cfg.paths.remote_media, res.stopwords);
  auto items = remote.Fetch();
  for (auto& item : items) item.origin = media::MediaOrigin::kRemote;
  spdlog::info("remote media: {} items ({} skipped)", items.size(), remote.skipped());
  pipeline.AddMedia(std::move(items));
}

// Runs `feed` while serving the API, then keeps serving until a stop signal.
template <typename Feed>
void serve_while(service::Pipeline& pipeline, const service::ApiConfig& cfg, const service::Resources& res,
                 Feed feed) {
  const sigset_t stop = block_stop_signals();
  service::Api api(pipeline.publisher(), res.category_rules, cfg.media);
  service::HttpServer server(api, {cfg.bind, cfg.port, cfg.cors_origin});
  const int port = server.Bind();
  std::thread http([&] { server.Serve(); });
  server.WaitUntilReady();
  spdlog::info("serving on http://{}:{}", cfg.bind, port);
  try {
    feed();
  } catch (...) {
    server.Stop();
    http.join();
    throw;
  }
  spdlog::info("ingest finished: {} posts, {} events", pipeline.counters().posts_ingested,
               pipeline.snapshot()->events.size());
  wait_for_stop(stop);
  server.Stop();
  http.join();
}

int run_serve(const std::string& config_flag, int port_override) {
  service::ApiConfig cfg = load_valid_config(config_flag);
  if (port_override >= 0) cfg.port = port_override;
  auto res = std::make_shared<const service::Resources>(service::load_resources(cfg));

  store::LoadResult recovered;
  store::LogOptions log_opts;
  log_opts.sync = cfg.pipeline.store_sync;
  auto log = store::SegmentLog::Open(cfg.paths.store_dir, log_opts, &recovered);
  if (recovered.torn) {
    spdlog::warn("{}: dropped {} bytes of torn tail", recovered.torn->segment.string(), recovered.torn->dropped_bytes);
  }
  service::Pipeline pipeline(res, cfg.track, service::pipeline_options(cfg), log.get());
  pipeline.Restore(recovered.state);
  spdlog::info("restored {} posts, {} events from {}", recovered.state.posts.size(),
               pipeline.snapshot()->events.size(), cfg.paths.store_dir.string());
  add_remote_media(pipeline, cfg, *res);
  pipeline.Publish();

  serve_while(pipeline, cfg, *res, [&] {
    if (cfg.paths.corpus.empty()) return;
    auto source = ingest::open_stream(cfg.paths.corpus.string());
    pipeline.Run(*source, cfg.track.replay_speed);
  });
  return 0;
}

int run_replay(const std::string& config_flag, const std::string& input, double speed, bool no_serve,
               int port_override) {
  if (!(speed >= 0.0)) throw InvalidArgument("speed", "must be >= 0");
  service::ApiConfig cfg = load_valid_config(config_flag);
  if (port_override >= 0) cfg.port = port_override;
  auto res = std::make_shared<const service::Resources>(service::load_resources(cfg));
  service::Pipeline pipeline(res, cfg.track, service::pipeline_options(cfg));
  add_remote_media(pipeline, cfg, *res);
  auto source = ingest::open_stream(input);

  if (no_serve) {
    pipeline.Run(*source, speed);
    std::cout << service::export_events(*pipeline.snapshot()).dump(2) << "\n";
    return 0;
  }
  serve_while(pipeline, cfg, *res, [&] { pipeline.Run(*source, speed); });
  return 0;
}

int run_validate(const std::string& config_flag) {
  const std::string path = resolve_config(config_flag);
  auto problems = service::validate_config(service::load_config(path));
  if (problems.empty()) {
    std::cout << path << ": ok\n";
    return 0;
  }
  for (const auto& p : problems) std::cerr << path << ": " << p << "\n";
  return 1;
}

int run_generate(const std::string& kind, uint64_t seed, uint64_t count, const std::string& start, int hours,
                 const std::string& out_path) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  const Timestamp t0 = parse_timestamp(start, "start");
  if (kind == "posts") {
    ingest::SyntheticOptions opts;
    opts.seed = seed;
    opts.count = count;
    opts.start = t0;
    ingest::SyntheticSource source(opts);
    while (auto raw = source.Next()) out << ingest::to_json(*raw).dump() << "\n";
  } else {
    for (const Json& j : ingest::synthetic_media_records(seed, count, t0, hours, kind == "remote" ? "rm" : "mc")) {
      out << j.dump() << "\n";
    }
  }
  out.flush();
  if (!out) throw IoError("write failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  auto logger = spdlog::stderr_color_mt("act");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%Y-%m-%d %H:%M:%S.%e] [%^%l%$] %v");

  CLI::App app{"Situational-awareness analytics for streamed social posts"};
  app.require_subcommand(1);
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));

  std::string config;
  int port = -1;

  auto* serve = app.add_subcommand("serve", "Ingest the configured stream and serve the HTTP API");
  serve->add_option("--config", config, "Config file (default: $ACT_CONFIG)");
  serve->add_option("--port", port, "Override server.port (0 picks a free port)")->check(CLI::Range(0, 65535));

  std::string input;
  double speed = 0.0;
  bool no_serve = false;
  auto* replay = app.add_subcommand("replay", "Replay a recorded or synthetic stream");
  replay->add_option("--input", input, "JSON Lines corpus, synthetic:SEED:COUNT or remote:ENDPOINT")->required();
  replay->add_option("--speed", speed, "Replay speed factor; 0 replays without delays");
  replay->add_flag("--no-serve", no_serve, "Ingest, print the event summary export and exit");
  replay->add_option("--config", config, "Config file (default: $ACT_CONFIG)");
  replay->add_option("--port", port, "Override server.port (0 picks a free port)")->check(CLI::Range(0, 65535));

  auto* validate = app.add_subcommand("validate-config", "Check a config file and the files it references");
  validate->add_option("--config", config, "Config file (default: $ACT_CONFIG)");

  std::string kind = "posts";
  uint64_t seed = 42;
  uint64_t count = 100;
  std::string start = "2013-10-17T00:00:00Z";
  int hours = 72;
  std::string out_path;
  auto* generate = app.add_subcommand("generate", "Write a synthetic corpus as JSON Lines");
  generate->add_option("--kind", kind, "posts, media or remote")->check(CLI::IsMember({"posts", "media", "remote"}));
  generate->add_option("--seed", seed, "Generator seed");
  generate->add_option("--count", count, "Number of records");
  generate->add_option("--start", start, "First timestamp (UTC)");
  generate->add_option("--hours", hours, "Time span of media records")->check(CLI::PositiveNumber);
  generate->add_option("--out", out_path, "Output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    if (*serve) return run_serve(config, port);
    if (*replay) return run_replay(config, input, speed, no_serve, port);
    if (*validate) return run_validate(config);
    if (*generate) return run_generate(kind, seed, count, start, hours, out_path);
  } catch (const InvalidArgument& e) {
    std::cerr << "act: " << e.field() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "act: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
