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

#include "act/store/segment_log.h"

#include <fcntl.h>
#include <spdlog/spdlog.h>
#include <sys/stat.h>
#include <unistd.h>
#include <zlib.h>

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>

#include "act/common/errors.h"
#include "act/common/files.h"

namespace act::store {

namespace fs = std::filesystem;

namespace {

uint32_t crc32_of(std::string_view data) {
  return static_cast<uint32_t>(
      ::crc32(0L, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
}

void put_be32(std::string& out, uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

uint32_t get_be32(std::string_view s, size_t pos) {
  return (static_cast<uint32_t>(static_cast<unsigned char>(s[pos])) << 24) |
         (static_cast<uint32_t>(static_cast<unsigned char>(s[pos + 1])) << 16) |
         (static_cast<uint32_t>(static_cast<unsigned char>(s[pos + 2])) << 8) |
         static_cast<uint32_t>(static_cast<unsigned char>(s[pos + 3]));
}

fs::path segment_path(const fs::path& dir, uint32_t number) {
  char name[32];
  std::snprintf(name, sizeof(name), "%06u.log", number);
  return dir / "segments" / name;
}

std::vector<std::pair<uint32_t, fs::path>> list_segments(const fs::path& dir) {
  std::vector<std::pair<uint32_t, fs::path>> out;
  const fs::path seg_dir = dir / "segments";
  if (!fs::is_directory(seg_dir)) return out;
  for (const auto& entry : fs::directory_iterator(seg_dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() != 10 || !name.ends_with(".log")) continue;
    const std::string digits = name.substr(0, 6);
    if (digits.find_first_not_of("0123456789") != std::string::npos) continue;
    out.emplace_back(static_cast<uint32_t>(std::stoul(digits)), entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string encode_frame(std::string_view payload) {
  std::string out;
  out.reserve(kFrameHeaderBytes + payload.size());
  put_be32(out, static_cast<uint32_t>(payload.size()));
  put_be32(out, crc32_of(payload));
  out.append(payload);
  return out;
}

LoadResult load(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("store directory " + dir.string() + " does not exist");
  LoadResult result;
  const auto segments = list_segments(dir);
  for (size_t si = 0; si < segments.size(); ++si) {
    const fs::path& path = segments[si].second;
    const bool last_segment = si + 1 == segments.size();
    result.segments.push_back(path);
    const std::string data = read_file(path);
    size_t pos = 0;
    while (pos < data.size()) {
      const size_t remaining = data.size() - pos;
      std::string problem;
      size_t frame_end = 0;
      if (remaining < kFrameHeaderBytes) {
        problem = "truncated frame header";
      } else {
        const uint32_t len = get_be32(data, pos);
        frame_end = pos + kFrameHeaderBytes + len;
        if (frame_end > data.size()) {
          problem = "truncated payload";
        } else if (crc32_of(std::string_view(data).substr(pos + kFrameHeaderBytes, len)) != get_be32(data, pos + 4)) {
          problem = "checksum mismatch";
        }
      }
      if (!problem.empty()) {
        const bool at_tail = last_segment && (frame_end == 0 || frame_end >= data.size());
        if (!at_tail) {
          throw CorruptionError(path.string() + " offset " + std::to_string(pos) + ": " + problem);
        }
        spdlog::warn("{}: dropping torn trailing record at offset {} ({}, {} bytes)", path.string(), pos,
                     problem, remaining);
        result.torn = TornTail{path, pos, remaining};
        break;
      }
      const size_t len = frame_end - pos - kFrameHeaderBytes;
      StoreRecord r = decode_record(std::string_view(data).substr(pos + kFrameHeaderBytes, len));
      if (r.seq <= result.state.last_seq) {
        throw CorruptionError(path.string() + " offset " + std::to_string(pos) + ": seq " +
                              std::to_string(r.seq) + " does not follow " +
                              std::to_string(result.state.last_seq));
      }
      result.state.Apply(r);
      result.records.push_back(std::move(r));
      pos = frame_end;
    }
  }
  return result;
}

SegmentLog::SegmentLog(fs::path dir, LogOptions options) : dir_(std::move(dir)), options_(options) {}

SegmentLog::~SegmentLog() {
  if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<SegmentLog> SegmentLog::Open(const fs::path& dir, LogOptions options, LoadResult* recovered) {
  std::error_code ec;
  fs::create_directories(dir / "segments", ec);
  if (ec) throw IoError("cannot create " + (dir / "segments").string() + ": " + ec.message());

  LoadResult loaded = load(dir);
  std::unique_ptr<SegmentLog> log(new SegmentLog(dir, options));
  log->last_seq_ = loaded.state.last_seq;
  if (loaded.segments.empty()) {
    log->OpenSegment(1, false, 0);
  } else {
    const auto segments = list_segments(dir);
    const uint32_t number = segments.back().first;
    if (loaded.torn) {
      log->OpenSegment(number, true, loaded.torn->valid_bytes);
    } else {
      log->OpenSegment(number, false, 0);
    }
  }
  if (recovered) *recovered = std::move(loaded);
  return log;
}

void SegmentLog::OpenSegment(uint32_t number, bool truncate_to_valid, uint64_t valid_bytes) {
  if (fd_ >= 0) ::close(fd_);
  const fs::path path = segment_path(dir_, number);
  fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) throw IoError("cannot open segment " + path.string() + ": " + std::strerror(errno));
  if (truncate_to_valid) {
    if (::ftruncate(fd_, static_cast<off_t>(valid_bytes)) != 0) {
      throw IoError("cannot truncate torn tail of " + path.string() + ": " + std::strerror(errno));
    }
  }
  struct stat st {};
  if (::fstat(fd_, &st) != 0) throw IoError("cannot stat " + path.string());
  segment_number_ = number;
  segment_size_ = static_cast<uint64_t>(st.st_size);
}

void SegmentLog::WriteAll(const std::string& bytes) {
  size_t done = 0;
  while (done < bytes.size()) {
    const ssize_t n = ::write(fd_, bytes.data() + done, bytes.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw IoError(std::string("append failed (") + std::strerror(errno) +
                    "); last durable seq " + std::to_string(last_seq_));
    }
    done += static_cast<size_t>(n);
  }
  if (options_.sync && ::fdatasync(fd_) != 0) {
    throw IoError(std::string("fdatasync failed (") + std::strerror(errno) + "); last durable seq " +
                  std::to_string(last_seq_));
  }
}

uint64_t SegmentLog::Append(RecordKind kind, Json payload) {
  StoreRecord r{kind, std::move(payload), last_seq_ + 1};
  const std::string frame = encode_frame(encode_record(r));
  if (segment_size_ > 0 && segment_size_ + frame.size() > options_.segment_bytes) {
    OpenSegment(segment_number_ + 1, false, 0);
  }
  WriteAll(frame);
  segment_size_ += frame.size();
  last_seq_ = r.seq;
  return last_seq_;
}

}  // namespace act::store
