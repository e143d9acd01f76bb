// Copyright 2026 The RingBalance Authors
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

#ifndef RINGBAL_CLI_HPP
#define RINGBAL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ringbal {

// Exit codes: 0 success, 1 infeasible problem, 2 input/usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitInputError = 2;

/// Entry point behind the ringbalance binary; `args` excludes argv[0].
/// Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ringbal

#endif  // RINGBAL_CLI_HPP
