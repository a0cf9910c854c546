// Copyright 2026 The affmatch Authors.
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

#ifndef AFFMATCH_TOOLS_CLI_H_
#define AFFMATCH_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace affmatch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitEmptyCore = 2;
inline constexpr int kExitBoundExceeded = 3;
inline constexpr int kExitInfeasible = 4;
inline constexpr int kExitUsage = 64;

// Runs one command. `args` excludes the program name. A file argument of "-"
// reads from `in`.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace affmatch::cli

#endif  // AFFMATCH_TOOLS_CLI_H_
