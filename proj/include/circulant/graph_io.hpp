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

// Graph interchange: one JSON object per line,
//   {"n": <int>, "directed": <bool>, "generators": [<int>, ...]}
// with the fully expanded connection set. Integers are written as exact
// decimal literals of any width; the reader accepts the same.

#include <string>
#include <string_view>

#include "circulant/cyclic.hpp"

namespace circulant {

std::string to_json_line(const ConnectionSet& s);

/// Throws invalid_connection_set for malformed JSON, missing or extra
/// fields, non-integral numbers, or any ConnectionSet invariant violation.
ConnectionSet parse_graph_line(std::string_view line);

}  // namespace circulant
