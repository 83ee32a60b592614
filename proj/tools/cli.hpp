/*
 * Copyright (c) 2026 vvjack contributors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef VVJACK_TOOLS_CLI_HPP
#define VVJACK_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace vvjack::cli {

// Parses and runs one command line (program name excluded).  Results go to
// out, diagnostics to err.  Returns the process exit code: 0 on success,
// 1 when the request is well formed but mathematically out of domain
// (incompatible filling, missing restriction property, singular parameter
// value), 2 on parse or validation errors.  Identical requests produce
// byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace vvjack::cli

#endif  // VVJACK_TOOLS_CLI_HPP
