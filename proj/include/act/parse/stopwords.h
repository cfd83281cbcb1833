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
#include <set>
#include <string>

namespace act::parse {

using StopwordSet = std::set<std::string, std::less<>>;

// The shipped English list; data/stopwords.txt carries the same terms.
const StopwordSet& default_stopwords();

// One lowercase term per line; blank lines and '#' comments ignored.
StopwordSet load_stopwords(const std::filesystem::path& path);

}  // namespace act::parse
