// Copyright 2026 The seqz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEQZ_CLI_HPP
#define SEQZ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace seqz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // usage, I/O or parse errors
inline constexpr int kExitMismatch = 2;  // ran fine, a check disagreed

/// Runs one subcommand. args[0] is the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqz::cli

#endif  // SEQZ_CLI_HPP
