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

#include "act/store/records.h"

namespace act::store {

// Frame layout inside a segment:
//   u32 big-endian payload length | u32 big-endian CRC32(payload) | payload
// Segments live in DIR/segments/000001.log, 000002.log, ...
inline constexpr size_t kFrameHeaderBytes = 8;
inline constexpr uint64_t kDefaultSegmentBytes = 64ull << 20;

std::string encode_frame(std::string_view payload);

struct LogOptions {
  uint64_t segment_bytes = kDefaultSegmentBytes;
  // fdatasync after every append. Without it a record is durable against a
  // process crash (it is in the kernel) but not against power loss.
  bool sync = false;
};

struct TornTail {
  std::filesystem::path segment;
  uint64_t valid_bytes = 0;
  uint64_t dropped_bytes = 0;
};

struct LoadResult {
  StoreState state;
  std::vector<StoreRecord> records;
  std::optional<TornTail> torn;
  std::vector<std::filesystem::path> segments;
};

// Replays every segment. Only the last record of the last segment may be
// incomplete or fail its checksum; that tail is reported (and logged) but
// the file is not modified. Any other damage throws CorruptionError. A
// missing `dir` throws IoError; a directory without segments is empty.
LoadResult load(const std::filesystem::path& dir);

// Append-only writer. Open() recovers the directory first: a torn tail is
// truncated away so new records follow the last durable one.
class SegmentLog {
 public:
  static std::unique_ptr<SegmentLog> Open(const std::filesystem::path& dir, LogOptions options = {},
                                          LoadResult* recovered = nullptr);
  ~SegmentLog();

  SegmentLog(const SegmentLog&) = delete;
  SegmentLog& operator=(const SegmentLog&) = delete;

  // Writes the record and returns its seq once the bytes are handed to the
  // kernel (and synced, with LogOptions::sync). Throws IoError naming the
  // last durable seq on failure.
  uint64_t Append(RecordKind kind, Json payload);

  uint64_t last_seq() const { return last_seq_; }
  const std::filesystem::path& dir() const { return dir_; }

 private:
  SegmentLog(std::filesystem::path dir, LogOptions options);
  void OpenSegment(uint32_t number, bool truncate_to_valid, uint64_t valid_bytes);
  void WriteAll(const std::string& bytes);

  std::filesystem::path dir_;
  LogOptions options_;
  int fd_ = -1;
  uint32_t segment_number_ = 0;
  uint64_t segment_size_ = 0;
  uint64_t last_seq_ = 0;
};

}  // namespace act::store
