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
#include <optional>
#include <string>
#include <string_view>

namespace act {

// All timestamps are UTC with one-second resolution.
using Timestamp = std::chrono::sys_seconds;
using Seconds = std::chrono::seconds;

// Accepts "YYYY-MM-DDTHH:MM:SS" followed by an optional fraction and a
// "Z" or "+00:00" designator. Fractions are truncated.
std::optional<Timestamp> try_parse_timestamp(std::string_view text);

// Throws InvalidArgument(field) when `text` is not a valid timestamp.
Timestamp parse_timestamp(std::string_view text, const std::string& field = "timestamp");

// "2013-10-17T04:12:00Z"
std::string format_timestamp(Timestamp ts);

inline double hours_between(Timestamp a, Timestamp b) {
  return static_cast<double>((b - a).count()) / 3600.0;
}

}  // namespace act
