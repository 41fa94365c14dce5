// Copyright 2026 The whsp Authors
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

#ifndef WHSP_CLI_HPP_
#define WHSP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace whsp {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // verification failed or a capacity limit was hit
  kExitUsage = 2,
};

/// Entry point for `whsp <solve|qft|verify|sweep|enumerate> [flags]`.
/// `args[0]` is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace whsp

#endif  // WHSP_CLI_HPP_
