// Copyright 2026 The braidcircuit Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidcircuit::cli {

/// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int dispatch(int argc, const char *const *argv);

/// Inclusive start:stop:step grid (endpoint kept within half a step); a plain number
/// gives a single value and a comma list is taken literally.
std::vector<double> parse_grid(const std::string &text);

/// Sites from "a:b" (inclusive range) or a comma list.
std::vector<int> parse_sites(const std::string &text);

}  // namespace braidcircuit::cli
