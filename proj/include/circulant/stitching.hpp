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
 * @file stitching.hpp
 * @brief Stitching two circulants into one on n_1 n_2 vertices.
 *
 * With S_i written in the interval (-n_i/2, n_i/2], the connection set
 * n_2 S_1 u S_2 over Z_{n_1 n_2} has diameter at most k_1 + k_2: reduce
 * x mod n_2 with at most k_2 steps of S_2 (the integer carry is a multiple
 * of n_2), then finish with at most k_1 steps of n_2 S_1. The orders need
 * not be coprime.
 *
 * Undirected inputs stay symmetric except for n_2/2 when d_2 is odd. If
 * only one degree is odd the arguments are swapped so the even one plays
 * the S_2 role (delta = 0); if both are odd, -n_2/2 is added (delta = 1).
 */

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "circulant/cyclic.hpp"
#include "circulant/metrics.hpp"

namespace circulant {

class stitch_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StitchOptions {
  bool auto_swap = true;  // reorder mixed-parity undirected inputs so delta = 0
  bool verify = true;     // BFS-check inputs and output when within the work cap
  BfsOptions bfs;
};

struct StitchPart {
  CirculantGraph graph;
  std::uint32_t diameter = 0;  // claimed bound k_i
};

struct StitchResult {
  CirculantGraph graph;
  std::uint32_t diameter_bound = 0;
  int delta = 0;
  bool swapped = false;
  std::size_t degree_bound = 0;  // d_1 + d_2 + delta (summed over folds)
  /// BFS diameter of the product when verification ran within the cap.
  std::optional<std::uint32_t> verified_diameter;
};

/// Throws stitch_error for mixed directedness, a claimed diameter that BFS
/// refutes, or a broken symmetry/degree invariant in the product.
StitchResult stitch(const CirculantGraph& g1, const CirculantGraph& g2, std::uint32_t k1, std::uint32_t k2,
                    const StitchOptions& options = {});

/// Left fold of stitch over at least two parts.
StitchResult stitch_chain(std::span<const StitchPart> parts, const StitchOptions& options = {});

}  // namespace circulant
