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

#include <iosfwd>
#include <string>
#include <vector>

namespace symdiv {

struct SweepSummary;

inline constexpr int kExitOk            = 0;
inline constexpr int kExitInputError    = 1;
inline constexpr int kExitAssertFailure = 2;

/// Entry point of the symdiv tool. args[0] is the program name.
/// Subcommands: compute, bounds, verify, sweep-s.
/// 0 for a sweep without ASSERT failures, 2 otherwise.
int verify_exit_code(SweepSummary const &summary) noexcept;

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

}  // namespace symdiv
