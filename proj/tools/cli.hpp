// Copyright 2026 The subfst Authors.
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

#ifndef SUBFST_TOOLS_CLI_HPP_
#define SUBFST_TOOLS_CLI_HPP_

#include <ostream>

namespace subfst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand: promote, tokenize, enumerate, check, mask or dot.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace subfst::cli

#endif  // SUBFST_TOOLS_CLI_HPP_
