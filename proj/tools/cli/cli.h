// Copyright 2026 The rbim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// The rbim command line, as a library so tests can drive it in-process.

#ifndef RBIM_TOOLS_CLI_CLI_H_
#define RBIM_TOOLS_CLI_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace rbim::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;
inline constexpr int kExitSizeLimit = 2;
inline constexpr int kExitUnknownName = 3;
inline constexpr int kExitShapeInfeasible = 4;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitNoInput = 66;

// Runs one invocation. args excludes the program name. Input named "-" is
// read from in.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

// Lowercase hex SHA-256 of data.
std::string Sha256Hex(const std::string& data);

}  // namespace rbim::cli

#endif  // RBIM_TOOLS_CLI_CLI_H_
