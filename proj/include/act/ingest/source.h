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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "act/ingest/queue.h"
#include "act/ingest/raw_post.h"

namespace act::ingest {

// Pull-based ordered stream of raw records.
class PostSource {
 public:
  virtual ~PostSource() = default;

  // Next record in arrival order, or nullopt at end of stream.
  virtual std::optional<RawPost> Next() = 0;

  // Lines that could not be parsed so far.
  virtual uint64_t skipped() const { return 0; }

  virtual std::string Describe() const = 0;
};

// Streams a JSON Lines corpus one line at a time. Malformed lines are
// logged and counted, never fatal.
class CorpusSource final : public PostSource {
 public:
  // Throws IoError when the file cannot be opened.
  explicit CorpusSource(std::filesystem::path path, SourceTag tag = SourceTag::kReplay);

  std::optional<RawPost> Next() override;
  uint64_t skipped() const override { return skipped_; }
  std::string Describe() const override { return path_.string(); }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  SourceTag tag_;
  uint64_t line_no_ = 0;
  uint64_t skipped_ = 0;
};

// Remote platform feed. Only a canned stub ships; a credentialed client
// would implement this same interface.
class RemoteSource : public PostSource {
 public:
  explicit RemoteSource(std::string endpoint) : endpoint_(std::move(endpoint)) {}
  const std::string& endpoint() const { return endpoint_; }
  std::string Describe() const override { return "remote:" + endpoint_; }

 private:
  std::string endpoint_;
};

class StubRemoteSource final : public RemoteSource {
 public:
  // With no records given, serves a small built-in sequence.
  explicit StubRemoteSource(std::string endpoint, std::vector<RawPost> canned = {});

  std::optional<RawPost> Next() override;

 private:
  std::vector<RawPost> canned_;
  size_t next_ = 0;
};

// Accepts "synthetic:SEED:COUNT", "remote:ENDPOINT", or a corpus path.
// Throws IoError for an unreadable corpus, InvalidArgument for a bad spec.
std::unique_ptr<PostSource> open_stream(const std::string& source_spec);

// Spaces records by their timestamp gaps divided by `speed`. Speed 0 never
// sleeps; negative gaps (out-of-order records) do not sleep either.
class ReplayPacer {
 public:
  using Sleeper = std::function<void(std::chrono::microseconds)>;

  explicit ReplayPacer(double speed, Sleeper sleeper = {});

  void Pace(Timestamp record_time);

 private:
  double speed_;
  Sleeper sleeper_;
  std::optional<Timestamp> last_;
};

struct FeedResult {
  uint64_t emitted = 0;
  uint64_t skipped = 0;
};

// Producer loop: pulls from `source`, paces, and pushes into `queue` until
// the source ends, then closes the queue.
FeedResult run_feeder(PostSource& source, ReplayPacer& pacer, BoundedQueue<RawPost>& queue);

}  // namespace act::ingest
