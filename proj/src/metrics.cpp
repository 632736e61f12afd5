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

#include "circulant/metrics.hpp"

#include <limits>

namespace circulant {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

struct LayeredBfs {
  std::int64_t n;
  std::vector<std::int64_t> steps;
  std::vector<std::uint32_t> dist;
  std::int64_t reached = 1;
  std::uint32_t depth = 0;

  explicit LayeredBfs(const CirculantGraph& g)
      : n(static_cast<std::int64_t>(g.order())), dist(static_cast<std::size_t>(n), kUnreached) {
    steps.reserve(g.degree());
    for (integer s : g.connection().elements()) steps.push_back(static_cast<std::int64_t>(s));
    dist[0] = 0;
  }

  // Runs until everything is reached, the frontier empties, or `max_depth`
  // layers have been expanded.
  void run(std::uint32_t max_depth) {
    std::vector<std::int64_t> frontier{0}, next;
    while (!frontier.empty() && reached < n && depth < max_depth) {
      next.clear();
      const std::uint32_t layer = depth + 1;
      for (std::int64_t x : frontier) {
        for (std::int64_t s : steps) {
          std::int64_t y = x + s;
          if (y >= n) y -= n;
          if (dist[static_cast<std::size_t>(y)] == kUnreached) {
            dist[static_cast<std::size_t>(y)] = layer;
            next.push_back(y);
          }
        }
      }
      reached += static_cast<std::int64_t>(next.size());
      if (!next.empty()) depth = layer;
      frontier.swap(next);
    }
  }
};

}  // namespace

void check_work_cap(const CirculantGraph& g, const BfsOptions& options) {
  const integer work = checked_mul(g.order(), static_cast<integer>(g.degree()));
  if (work > static_cast<integer>(options.work_cap)) {
    throw work_cap_exceeded("BFS on n=" + to_string(g.order()) + ", degree " + std::to_string(g.degree()) +
                            " needs " + to_string(work) + " edge traversals, above the cap of " +
                            std::to_string(options.work_cap));
  }
}

DistanceProfile bfs_profile(const CirculantGraph& g, const BfsOptions& options) {
  check_work_cap(g, options);
  LayeredBfs bfs(g);
  bfs.run(kUnreached);
  if (bfs.reached < bfs.n) throw disconnected_graph(g.order(), bfs.reached);
  return DistanceProfile{bfs.n, std::move(bfs.dist), bfs.depth};
}

std::uint32_t diameter(const CirculantGraph& g, const BfsOptions& options) {
  return bfs_profile(g, options).diameter;
}

bool verify_diameter_at_most(const CirculantGraph& g, std::uint32_t k, const BfsOptions& options) {
  check_work_cap(g, options);
  LayeredBfs bfs(g);
  bfs.run(k);
  return bfs.reached == bfs.n;
}

std::int64_t count_beyond(const CirculantGraph& g, std::uint32_t k, const BfsOptions& options) {
  check_work_cap(g, options);
  LayeredBfs bfs(g);
  bfs.run(k);
  return bfs.n - bfs.reached;
}

}  // namespace circulant
