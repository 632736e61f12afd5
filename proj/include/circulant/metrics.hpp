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
 * @file metrics.hpp
 * @brief Distances and diameter of circulant graphs.
 *
 * Circulants are vertex transitive, so the distance profile from vertex 0
 * determines the diameter: dist[x] is the least number of connection-set
 * elements summing to x mod n. BFS steps +s for every s in S, layer by
 * layer; the cost is n * degree edge traversals, bounded by a work cap.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circulant/cyclic.hpp"

namespace circulant {

inline constexpr std::uint64_t kDefaultWorkCap = 1'000'000'000ULL;

struct BfsOptions {
  std::uint64_t work_cap = kDefaultWorkCap;  // max edge traversals (n * degree)
};

/// Thrown when some vertex is unreachable from 0 (gcd(S u {n}) > 1).
class disconnected_graph : public std::runtime_error {
 public:
  disconnected_graph(integer n, integer component_order)
      : std::runtime_error("graph on " + to_string(n) + " vertices is disconnected: component of 0 has " +
                           to_string(component_order) + " vertices"),
        reachable(component_order) {}
  integer reachable;
};

class work_cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DistanceProfile {
  std::int64_t n = 0;
  std::vector<std::uint32_t> dist;
  std::uint32_t diameter = 0;
};

/// Full distance profile from 0. Throws disconnected_graph or
/// work_cap_exceeded.
DistanceProfile bfs_profile(const CirculantGraph& g, const BfsOptions& options = {});

std::uint32_t diameter(const CirculantGraph& g, const BfsOptions& options = {});

/// True iff every vertex is within k steps of 0. Stops after layer k, so a
/// disconnected graph simply yields false. Throws work_cap_exceeded.
bool verify_diameter_at_most(const CirculantGraph& g, std::uint32_t k, const BfsOptions& options = {});

/// Number of vertices at distance > k from 0 (unreachable ones included).
/// Used as the objective of heuristic search; same work cap semantics.
std::int64_t count_beyond(const CirculantGraph& g, std::uint32_t k, const BfsOptions& options = {});

/// Throws work_cap_exceeded when n * degree exceeds the cap.
void check_work_cap(const CirculantGraph& g, const BfsOptions& options);

}  // namespace circulant
