//------------------------------------------------------------------------------
//
//   Copyright 2026 The symdiv Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

namespace symdiv {

/// Parses either a JSON object {"weights": [numbers...]} or CSV text with one decimal
/// number per line (blank lines ignored). The format is chosen from the first
/// non-whitespace character. Throws Error(PARSE_ERROR) on malformed input.
std::vector<double> parse_histogram(std::string_view text);

std::vector<double> read_histogram_file(std::filesystem::path const &path);

}  // namespace symdiv
