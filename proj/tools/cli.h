// Copyright 2026 The hkgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HKGEOM_TOOLS_CLI_H_
#define HKGEOM_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace hkgeom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGeometry = 3;

// Runs one command line (without the program name) and returns the exit
// status. Subcommands: line, dist, ruler, intersect, parallels, angle,
// verify, render.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hkgeom::cli

#endif  // HKGEOM_TOOLS_CLI_H_
