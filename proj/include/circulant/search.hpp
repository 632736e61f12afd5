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
 * @file search.hpp
 * @brief Searching for circulants of given degree, diameter and order.
 *
 * Exhaustive mode enumerates generator sets in increasing order and keeps a
 * partial set only if it is the least member of its orbit under the
 * multipliers x -> u x (gcd(u, n) = 1). Multipliers give isomorphic
 * circulants, and the least member of an orbit stays least when its largest
 * element is dropped, so every orbit is still visited once.
 *
 * Heuristic mode is steepest descent over single-generator swaps on the
 * number of vertices farther than k from 0, with seeded restarts.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "circulant/cyclic.hpp"
#include "circulant/torus.hpp"

namespace circulant {

/// Least element of {normalize(u S) : gcd(u, n) = 1} under the sorted-
/// sequence order.
ConnectionSet canonical_rep(const ConnectionSet& s);

/// Largest n any circulant of degree d and diameter <= k can have: lattice
/// points within l1 radius k (with the involution counted for odd
/// undirected d), or C(d + k, k) when directed. Saturates at the integer
/// range.
integer abelian_moore_bound(int d, int k, bool directed);

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000ULL;

enum class SearchStatus {
  found,
  absent,            // exhaustively refuted
  budget_exhausted,  // neither
};

std::string to_string(SearchStatus s);

struct ExistsResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<ConnectionSet> witness;
  std::uint64_t nodes = 0;  // enumeration nodes, including BFS checks
  std::string reason;       // why absence was immediate, when it was
};

/// Exhaustive search for a degree-d circulant on Z_n with diameter <= k.
/// Throws std::invalid_argument when the shape is infeasible (odd d with
/// odd n undirected, d > n - 1, k < 1).
ExistsResult exists_graph(std::int64_t n, int d, int k, bool directed,
                          std::uint64_t budget = kDefaultSearchBudget);

/// Same enumeration without multiplier pruning; the reference for the
/// canonical search.
ExistsResult exists_graph_unpruned(std::int64_t n, int d, int k, bool directed,
                                   std::uint64_t budget = kDefaultSearchBudget);

enum class SearchMode { exhaustive, heuristic };

struct SearchSpec {
  int d = 0;
  int k = 0;
  bool directed = false;
  SearchMode mode = SearchMode::exhaustive;
  std::int64_t n_lo = 1;
  std::int64_t n_hi = 0;
  /// Node expansions for the whole call, split evenly over shards.
  std::uint64_t budget = kDefaultSearchBudget;
  std::optional<std::uint64_t> seed;  // required in heuristic mode
  unsigned jobs = 1;

  ValidationReport validate() const;
};

struct SearchProgress {
  std::int64_t n = 0;
  SearchStatus status = SearchStatus::absent;
  std::uint64_t nodes = 0;
};

using ProgressCallback = std::function<void(const SearchProgress&)>;

struct SearchResult {
  std::optional<std::int64_t> n_best;
  std::optional<ConnectionSet> witness;
  /// Every n above n_best in range was exhaustively refuted.
  bool definitive = false;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

/// Associative merge of shard results over disjoint ranges; `upper` covers
/// the larger n values.
SearchResult merge_results(const SearchResult& lower, const SearchResult& upper);

/// Scans n_range downward (per shard) and reports the largest n with a
/// witness. The callback may be called from several threads, never
/// concurrently. Throws std::invalid_argument for an invalid spec.
SearchResult find_max_order(const SearchSpec& spec, const ProgressCallback& progress = {});

}  // namespace circulant
