// Copyright 2026 The privlab Authors
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


#ifndef PRIVLAB_CLI_DISPATCH_HPP
#define PRIVLAB_CLI_DISPATCH_HPP

#include <iosfwd>

#include "cli/config.hpp"
#include "cli/report.hpp"

namespace privlab::cli {

// Runs the module operations behind cfg.command. Library exceptions pass
// through unchanged.
RunReport dispatch(const ExperimentConfig& cfg);

// Full command line driver. Returns the process exit status: 0 success,
// 2 config error, 3 numerical invariant violated, 4 IO error, 1 anything
// else. Failures print one JSON error object to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace privlab::cli

#endif  // PRIVLAB_CLI_DISPATCH_HPP
