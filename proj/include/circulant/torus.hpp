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
 * @file torus.hpp
 * @brief Bounded decompositions on discrete tori.
 *
 * Two-generator form: on T = Z_r x Z_s with r = s + m d and v = u + d,
 * every (x, y) equals h (1,1) + l (u,v) with h < s + m v and
 * l < s - m (u - 1), provided s > 1, gcd(s, m d) = 1 and s >= m v (u - 1).
 *
 * Ladder form: on T = Z_{r_1} x ... x Z_{r_k} with the all-ones vector o,
 * the staircase u = (1, 2, ..., k) and the coordinate vectors e_i, every x
 * is a bounded nonnegative combination of any k of these k + 2 vectors,
 * with bounds c_o = max_{i<j} (r_j + j m_ij), c_u = r_1, c_{e_i} = r_i.
 * The pairwise step m_ij is (r_i - r_j) / (j - i).
 */

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "circulant/cyclic.hpp"

namespace circulant {

/// List of violated preconditions; empty means valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
  void add(std::string message) { violations.push_back(std::move(message)); }
  void merge(const ValidationReport& other, const std::string& prefix = {});
  std::string summary() const;
};

struct TorusParams {
  integer u = 1;
  integer d = 1;
  integer s = 2;
  integer m = 1;

  integer v() const { return u + d; }
  integer r() const { return s + m * d; }
  /// Exclusive bound on h.
  integer h_bound() const { return s + m * v(); }
  /// Exclusive bound on l.
  integer ell_bound() const { return s - m * (u - 1); }
};

ValidationReport validate_torus(const TorusParams& p);

struct DecompWitness {
  integer h = 0;
  integer ell = 0;
  friend bool operator==(const DecompWitness&, const DecompWitness&) = default;
};

/// Witness with the least l for (x, y) in Z_r x Z_s. Walks l upwards along
/// the cycle generated by (1,1), so the cost is O(l). Throws
/// std::invalid_argument for invalid parameters or out-of-range inputs.
DecompWitness decompose_pair(const TorusParams& p, integer x, integer y);

// ---------------------------------------------------------------------------

struct LadderElement {
  enum class Kind { o, u, e };
  Kind kind = Kind::o;
  int index = 0;  // 1-based coordinate for Kind::e, 0 otherwise

  static LadderElement all_ones() { return {Kind::o, 0}; }
  static LadderElement staircase() { return {Kind::u, 0}; }
  static LadderElement axis(int i) { return {Kind::e, i}; }

  std::string name() const;
  friend auto operator<=>(const LadderElement&, const LadderElement&) = default;
};

struct LadderParams {
  int k = 0;
  std::vector<integer> radii;             // r_1 > r_2 > ... > r_k
  std::vector<std::vector<integer>> step;  // step[i][j] = m_{i+1,j+1} for i < j
  integer c_o = 0;
  integer c_u = 0;

  integer m(int i, int j) const { return step[i - 1][j - 1]; }  // 1-based
  integer bound(const LadderElement& s) const;
};

struct LadderValidation {
  ValidationReport report;
  LadderParams params;  // recomputed from the radii; meaningful when report.ok()
};

/// Checks every ladder hypothesis on the radii plus gcd(r_i, w) = 1, and
/// recomputes m_ij, c_o and c_u from the radii alone.
LadderValidation validate_ladder(std::span<const integer> radii, integer w);

/// As above, additionally flagging caller-supplied m / c_o / c_u values
/// that disagree with the recomputation.
LadderValidation validate_ladder(const LadderParams& claimed, integer w);

using LadderCoefficients = std::map<LadderElement, integer>;

/// Coefficients h_s < c_s for the k elements of {o, u, e_1..e_k} not in
/// `omitted`, with x = sum h_s s. Throws std::invalid_argument on invalid
/// parameters or a malformed omitted pair.
LadderCoefficients decompose_ladder(const LadderParams& p, const ResidueVector& x,
                                    std::span<const LadderElement> omitted);

/// Coordinates of sum h_s s, reduced mod each radius.
std::vector<integer> ladder_reconstruct(const LadderParams& p, const LadderCoefficients& coefficients);

}  // namespace circulant
