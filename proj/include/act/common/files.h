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
#include <string>
#include <vector>

#include "json.hpp"

namespace act {

using Json = nlohmann::json;

// Whole-file reads; throw IoError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Throws IoError on open failure, InvalidArgument(path) on a parse error.
Json read_json_file(const std::filesystem::path& path);

// Non-empty lines with surrounding whitespace removed and '#' comments skipped.
std::vector<std::string> read_term_list(const std::filesystem::path& path);

std::string trim(std::string_view s);

}  // namespace act
