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

/**
 * @file integer.hpp
 * @brief Exact 128-bit integer helpers.
 *
 * Family constructions reach orders around 10^29 (directed diameter 9), so
 * every construction path works in signed 128-bit arithmetic. Products and
 * sums that could leave the representable range go through the checked_*
 * helpers, which throw instead of wrapping.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace circulant {

__extension__ typedef __int128 integer;

class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline integer checked_add(integer a, integer b) {
  integer r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("128-bit addition overflow");
  return r;
}

inline integer checked_sub(integer a, integer b) {
  integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("128-bit subtraction overflow");
  return r;
}

inline integer checked_mul(integer a, integer b) {
  integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("128-bit multiplication overflow");
  return r;
}

/// Least nonnegative residue of a modulo m (m > 0).
constexpr integer mod(integer a, integer m) {
  integer r = a % m;
  return r < 0 ? r + m : r;
}

constexpr integer gcd(integer a, integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<integer> mod_inverse(integer a, integer m);

std::string to_string(integer v);

/// Parses an optionally signed decimal literal; throws std::invalid_argument.
integer parse_integer(std::string_view text);

/// True when v is representable as int64_t.
constexpr bool fits_int64(integer v) {
  return v >= static_cast<integer>(INT64_MIN) && v <= static_cast<integer>(INT64_MAX);
}

}  // namespace circulant
