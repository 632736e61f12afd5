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
 * @file sumsets.hpp
 * @brief k-fold sumsets in Z_n and the covering number SS(n, k).
 *
 * SS(n, k) is the least |A| with kA = Z_n. A directed circulant with
 * connection set S has diameter <= k exactly when k(S u {0}) = Z_n, so every
 * construction gives an upper bound.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "circulant/cyclic.hpp"
#include "circulant/metrics.hpp"

namespace circulant {

/// Subset of Z_n stored as a bitset of length n.
class ResidueSet {
 public:
  explicit ResidueSet(std::int64_t n);
  static ResidueSet from(std::int64_t n, std::span<const std::int64_t> elements);
  static ResidueSet full(std::int64_t n);

  std::int64_t modulus() const { return n_; }
  void insert(std::int64_t x);
  bool contains(std::int64_t x) const;
  std::int64_t size() const;
  bool empty() const { return size() == 0; }
  bool is_full() const { return size() == n_; }
  std::vector<std::int64_t> elements() const;

  /// Adds {a + y : a in *this} for y = shift.
  void or_translate(const ResidueSet& src, std::int64_t shift);

  friend ResidueSet operator+(const ResidueSet& a, const ResidueSet& b);  // sumset
  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::int64_t n_;
  std::vector<std::uint64_t> words_;
};

/// kA by doubling; throws std::invalid_argument when k < 1 or A is empty.
ResidueSet sumset_power(const ResidueSet& a, int k);

bool covers(const ResidueSet& a, int k);

/// |S u {0}| for a directed circulant whose diameter is verified <= k; throws
/// std::invalid_argument when the graph is undirected or too far, and
/// std::logic_error if BFS and the sumset disagree.
std::int64_t ss_upper_from_graph(const CirculantGraph& g, int k, const BfsOptions& options = {});

struct CoveringMinimum {
  int size = 0;
  std::vector<int> witness;  // ascending, contains 0
};

/// Exact SS(n, k) for 1 <= n <= 64 by exhaustive search with 0 in A.
CoveringMinimum ss_minimum(int n, int k);

}  // namespace circulant
