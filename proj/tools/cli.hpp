// Copyright 2026 The sicprob Authors
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

#ifndef SICPROB_TOOLS_CLI_HPP_
#define SICPROB_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sicprob::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,      // inputs parsed but fail validation
  kIncoherent = 2,   // a Dutch book was found
  kParseError = 3,   // unreadable file, malformed field, bad command line
};

/// Runs one command line (without the program name). Results go to `out`
/// unless the subcommand was given `-o`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sicprob::cli

#endif  // SICPROB_TOOLS_CLI_HPP_
