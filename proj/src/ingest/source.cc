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

#include "act/ingest/source.h"

#include <spdlog/spdlog.h>

#include <charconv>
#include <thread>

#include "act/common/errors.h"
#include "act/ingest/synthetic.h"

namespace act::ingest {

CorpusSource::CorpusSource(std::filesystem::path path, SourceTag tag)
    : path_(std::move(path)), in_(path_), tag_(tag) {
  if (!in_ || std::filesystem::is_directory(path_)) {
    throw IoError("cannot open corpus " + path_.string());
  }
}

std::optional<RawPost> CorpusSource::Next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      return parse_raw_post_line(line, tag_);
    } catch (const InvalidArgument& e) {
      ++skipped_;
      spdlog::warn("{}:{}: skipping malformed record ({})", path_.string(), line_no_, e.what());
    }
  }
  if (in_.bad()) throw IoError("read error on " + path_.string());
  return std::nullopt;
}

StubRemoteSource::StubRemoteSource(std::string endpoint, std::vector<RawPost> canned)
    : RemoteSource(std::move(endpoint)), canned_(std::move(canned)) {
  if (canned_.empty()) {
    SyntheticOptions opts;
    opts.seed = 7;
    opts.count = 20;
    SyntheticSource gen(opts);
    while (auto raw = gen.Next()) canned_.push_back(std::move(*raw));
  }
  for (auto& raw : canned_) raw.source_tag = SourceTag::kRemote;
}

std::optional<RawPost> StubRemoteSource::Next() {
  if (next_ >= canned_.size()) return std::nullopt;
  return canned_[next_++];
}

namespace {

uint64_t parse_u64(std::string_view s, const char* field) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument(field, "expected an unsigned integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::unique_ptr<PostSource> open_stream(const std::string& spec) {
  std::string_view s = spec;
  if (s.starts_with("synthetic:")) {
    s.remove_prefix(10);
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("source", "expected synthetic:SEED:COUNT");
    SyntheticOptions opts;
    opts.seed = parse_u64(s.substr(0, colon), "source.seed");
    opts.count = parse_u64(s.substr(colon + 1), "source.count");
    return std::make_unique<SyntheticSource>(opts);
  }
  if (s.starts_with("remote:")) {
    return std::make_unique<StubRemoteSource>(std::string(s.substr(7)));
  }
  return std::make_unique<CorpusSource>(spec);
}

ReplayPacer::ReplayPacer(double speed, Sleeper sleeper) : speed_(speed), sleeper_(std::move(sleeper)) {
  if (!sleeper_) sleeper_ = [](std::chrono::microseconds d) { std::this_thread::sleep_for(d); };
}

void ReplayPacer::Pace(Timestamp record_time) {
  if (speed_ > 0.0 && last_ && record_time > *last_) {
    const double gap_us = static_cast<double>((record_time - *last_).count()) * 1e6 / speed_;
    sleeper_(std::chrono::microseconds(static_cast<int64_t>(gap_us)));
  }
  if (!last_ || record_time > *last_) last_ = record_time;
}

FeedResult run_feeder(PostSource& source, ReplayPacer& pacer, BoundedQueue<RawPost>& queue) {
  FeedResult result;
  try {
    while (auto raw = source.Next()) {
      pacer.Pace(raw->created_at);
      if (!queue.Push(std::move(*raw))) break;
      ++result.emitted;
    }
  } catch (...) {
    queue.Close();
    throw;
  }
  result.skipped = source.skipped();
  queue.Close();
  return result;
}

}  // namespace act::ingest
