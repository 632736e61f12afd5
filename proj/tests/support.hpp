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

// Conversions between library values and the plain int64 data the oracles
// work on.

#include <cstdint>
#include <vector>

#include "circulant/cyclic.hpp"

namespace support {

inline std::vector<std::int64_t> to_i64(const std::vector<circulant::integer>& v) {
  return {v.begin(), v.end()};
}

inline std::vector<circulant::integer> to_int(const std::vector<std::int64_t>& v) {
  return {v.begin(), v.end()};
}

inline std::vector<std::int64_t> elements(const circulant::CirculantGraph& g) {
  return to_i64(g.connection().elements());
}

inline std::vector<std::int64_t> elements(const circulant::ConnectionSet& s) { return to_i64(s.elements()); }

}  // namespace support
