// Copyright 2026 The symmix Authors.
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

#ifndef SYMMIX_TOOLS_CLI_H_
#define SYMMIX_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace symmix::cli {

inline constexpr const char* kToolName = "symmix";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kDefaultExactCeiling = 14;

// Runs one invocation. args[0] is the program name. Data goes to `out` (or
// the --output file), diagnostics to `err`. Returns 0 on success, 2 on usage
// errors, 1 on computation errors.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace symmix::cli

#endif  // SYMMIX_TOOLS_CLI_H_
