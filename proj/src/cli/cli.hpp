// Copyright 2026 The locct developers
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

/**
 * @file cli.hpp
 * @brief Command-line entry point, reusable in-process for testing.
 *
 * Exit codes: 0 success (and affirmative answers); 1 negative verdicts
 * (not convertible, not reachable, a failed verification); 2 bad input
 * (malformed files, domain errors, usage mistakes); 3 internal invariant
 * failures, which indicate a bug.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace locct::cli {

/** Run the tool on @p args (without the program name). */
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace locct::cli
