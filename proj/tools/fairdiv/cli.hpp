// Copyright 2026 The fairdiv Authors.
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

// In-process driver for the fairdiv command line.
//
// Exit codes: 0 success, 1 domain failure (failed assertion, audit
// violation, no allocation found, unmet algorithm precondition), 2 usage or
// validation error. stdout always carries one JSON document; errors are
// reported there as {"error": {...}} and summarized on stderr.

#ifndef FAIRDIV_TOOLS_CLI_HPP_
#define FAIRDIV_TOOLS_CLI_HPP_

#include <string>
#include <vector>

namespace fairdiv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string stdout_text;
  std::string stderr_text;
};

/// `args` excludes the program name.
[[nodiscard]] CommandResult run_command(const std::vector<std::string>& args);

}  // namespace fairdiv::cli

#endif  // FAIRDIV_TOOLS_CLI_HPP_
