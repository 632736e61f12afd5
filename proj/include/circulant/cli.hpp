// Copyright 2026 The circulant Authors.
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circulant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verification did not pass
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Structured
/// output goes to `out` as JSON lines (or TSV), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circulant::cli
