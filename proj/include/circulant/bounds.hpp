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
 * @file bounds.hpp
 * @brief Asymptotic order constants for circulants of fixed diameter.
 *
 * For diameter k, L is the limiting ratio order / degree^k of the best
 * constructions, and R = k L^{1/k} normalizes it so that the trivial base-r
 * construction scores 1 and no circulant can exceed
 * R_max(k) = k (k!)^{-1/k}.
 *
 * L values are exact rationals wherever they come from a construction;
 * doubles appear only when converting to R.
 */

#include <optional>
#include <string>
#include <vector>

#include "circulant/rational.hpp"

namespace circulant {

double r_max(int k);

/// k L^{1/k}.
double r_from_l(int k, double l);
double r_from_l(int k, const Rational& l);

/// (R_1^{k_1} R_2^{k_2})^{1/(k_1+k_2)}: the R value a stitched product keeps.
double combine_r(double r1, int k1, double r2, int k2);

/// L_1 L_2 k_1^{k_1} k_2^{k_2} / (k_1 + k_2)^{k_1 + k_2}.
Rational combine_l(const Rational& l1, int k1, const Rational& l2, int k2);

struct Ceiling {
  std::optional<Rational> l;  // absent once the denominator passes 128 bits
  double l_value = 0;
  double r = 0;
};

/// Best L any direct-product construction can reach:
/// (k + 1) / (2 (k + 2)^{k - 1}). R is computed from logarithms, so it is
/// available for every k.
Ceiling direct_product_ceiling(int k);

enum class BoundRow {
  undirected_limsup,  // R^+ for undirected circulants
  undirected_liminf,  // R^- for undirected circulants
  directed_liminf,    // R^- for directed circulants
};

std::string row_name(BoundRow row);

struct BoundValue {
  int k = 0;
  std::optional<Rational> l;  // exact when every ingredient is exact
  double l_value = 0;
  double r = 0;
  std::string provenance;
  bool external = false;  // depends on data not reproducible here
};

struct BoundsRow {
  BoundRow row;
  std::vector<BoundValue> values;  // k = 1 .. max_k, index k - 1
  const BoundValue& at(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

/// Entries that come straight from constructions (no stitching) for k >= 2:
/// the family order coefficients w / slope^k and the external diameter-2
/// constants.
std::vector<BoundValue> direct_entries(BoundRow row);

/// Best value per diameter k = 1..max_k, maximizing R over the direct
/// entries, the trivial bound and every stitched split k = k_1 + k_2.
BoundsRow best_bounds(BoundRow row, int max_k = 9);

/// Reference table for k = 2..9 as printed (5 decimals), for auditing.
struct ReferenceTable {
  std::vector<double> r_max;
  std::vector<double> undirected_limsup;
  std::vector<double> undirected_liminf;
  std::vector<double> directed_liminf;
  const std::vector<double>& row(BoundRow r) const;
};
const ReferenceTable& reference_table();

/// True when x agrees with a 5-decimal printed value to within one unit in
/// the last place. The printed values mix rounding and truncation.
bool matches5(double x, double printed);

}  // namespace circulant
