// Copyright 2026 quasiorth developers
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

#ifndef QUASIORTH_CLI_HPP_
#define QUASIORTH_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace quasiorth {

// Parses and executes one command. Emits a report to `out` (JSON with
// --json, human-readable otherwise) and diagnostics to `err`. Returns 0
// when every boolean verdict is true, 1 when some verdict is false, and 2
// on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace quasiorth

#endif  // QUASIORTH_CLI_HPP_
