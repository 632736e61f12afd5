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
 * @file builders.hpp
 * @brief Direct-product circulant constructions.
 *
 * The group is T = Z_{r_1} x ... x Z_{r_k} x Z_w (cyclic because all factor
 * orders are pairwise coprime) and the generators are k axis lines, one
 * line along o = (1, ..., 1) and one along u = (1, 2, ..., k), each tagged
 * in the Z_w coordinate with one element of a base set B of size k + 2.
 * When the radii form a valid ladder and B covers Z_w with sums of k
 * distinct elements, every element of T is a sum of at most k generators,
 * so the circulant obtained through the CRT has diameter at most k. That
 * structural argument is what ConstructionCertificate records; no BFS is
 * needed, which is what makes orders around 10^14 and beyond checkable.
 *
 * Undirected: generators (x e_i, +-b_i), +-(x o, b_{k+1}) for x < c_o,
 *             +-(x u, b_{k+2}) for x < c_u.
 * Directed:   b_1 = 0; (x e_1, 0) for x != 0, (x e_i, b_i) for i >= 2,
 *             (x o, b_{k+1}) for x < c_o, (x u, b_{k+2}) for x < c_u.
 */

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/cyclic.hpp"
#include "circulant/rational.hpp"
#include "circulant/torus.hpp"

namespace circulant {

class construction_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BaseSet {
  integer w = 1;
  std::vector<integer> b;  // b_1 .. b_{k+2}, order significant
  int k = 0;
  bool directed = false;

  /// Size, distinctness and the directed/undirected zero rule.
  ValidationReport shape() const;
};

/// True iff every residue mod w is a sum of k distinct (by index) base
/// elements, each taken with either sign in the undirected case. Enumerates
/// all C(k+2, k) selections, times 2^k sign patterns when undirected.
bool check_base_cover(const BaseSet& base);

/// Residues mod w that no admissible selection reaches (empty iff covered).
std::vector<integer> uncovered_residues(const BaseSet& base);

struct ConstructionCertificate {
  ValidationReport ladder;
  ValidationReport base_cover;
  integer order = 0;
  std::size_t degree = 0;           // after normalization
  std::size_t generator_count = 0;  // before normalization, signs counted separately
  integer degree_bound = 0;         // 2(sum r + c_o + c_u) or sum r + c_o + c_u - 1
  int claimed_diameter = 0;

  bool valid() const {
    return ladder.ok() && base_cover.ok() && static_cast<integer>(degree) <= degree_bound;
  }
};

struct Construction {
  CirculantGraph graph;
  ConstructionCertificate certificate;
  LadderParams ladder;
};

/// Builds from base set and radii; base.directed selects the generator
/// families. Throws construction_error naming the first failed hypothesis
/// (ladder conditions, coprimality with w, base shape or cover).
Construction build_direct_product(const BaseSet& base, std::span<const integer> radii);
Construction build_undirected(const BaseSet& base, std::span<const integer> radii);
Construction build_directed(const BaseSet& base, std::span<const integer> radii);

/// Z_{r^k} with generators {h r^l : |h| <= r/2, 0 <= l < k}; diameter <= k.
CirculantGraph trivial_construction(integer r, int k, bool directed);

// ---------------------------------------------------------------------------
// Published parameter families
// ---------------------------------------------------------------------------

/// q mod `modulus` in `residues` (or not in, when `excluded`).
struct Congruence {
  integer modulus = 1;
  std::vector<integer> residues;
  bool excluded = false;

  bool holds(integer q) const;
  std::string describe() const;
};

struct FamilySpec {
  std::string name;
  bool directed = false;
  int k = 0;
  integer w = 1;
  std::vector<integer> base;     // b_1 .. b_{k+2}
  std::vector<integer> offsets;  // radii are q - offsets[i], offsets[0] = 0
  std::vector<Congruence> conditions;
  integer q_min = 0;
  integer degree_slope = 0;  // d = slope q + intercept
  integer degree_intercept = 0;
  integer c_o_offset = 0;  // published closed form c_o = q + offset
  Rational order_coefficient;
  std::vector<integer> order_shifts;  // order = coefficient * prod (d + shift)

  BaseSet base_set() const { return BaseSet{w, base, k, directed}; }
  std::vector<integer> radii(integer q) const;
  integer degree(integer q) const { return degree_slope * q + degree_intercept; }
  /// Empty report iff q >= q_min and every congruence holds.
  ValidationReport check_q(integer q) const;
  /// The first `count` admissible q values, ascending.
  std::vector<integer> valid_q(std::size_t count) const;
  std::string predicate() const;
};

/// The twelve families: undirected k = 3 (w = 57 and w = 56), 4, 5 and
/// directed k = 2..9.
const std::vector<FamilySpec>& published_families();

/// Throws std::invalid_argument for an unknown name.
const FamilySpec& find_family(std::string_view name);

/// Builds the family member for q and checks that the order equals the
/// family's degree polynomial. Throws construction_error when q is not
/// admissible (listing the violated congruences) or the checks fail.
Construction family_instantiate(const FamilySpec& family, integer q);

/// Exact value of the family's order polynomial at degree d; throws
/// std::domain_error when the value is not an integer.
integer family_predicted_order(const FamilySpec& family, integer d);

}  // namespace circulant
