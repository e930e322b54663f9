// Copyright 2026 The qrem Authors
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

#ifndef QREM_CLI_HPP
#define QREM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qrem::cli {

/// Runs the command line given as args (program name excluded). Data rows
/// go to `out` unless redirected by --output or QREM_OUTPUT_DIR; messages
/// and errors go to `err`. Returns the exit code: 0 success, 1 domain or
/// usage error, 2 I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// argv entry point.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qrem::cli

#endif
