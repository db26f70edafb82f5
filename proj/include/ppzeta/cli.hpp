// Copyright 2026 The ppzeta Authors
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

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit code: 0 on success, 1 when a verification
// fails, 2 on usage errors (usage text goes to `err`).

#ifndef PPZETA_CLI_HPP_
#define PPZETA_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ppz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppz::cli

#endif  // PPZETA_CLI_HPP_
