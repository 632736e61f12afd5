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

#include "circulant/stitching.hpp"

#include <utility>

namespace circulant {

namespace {

// Representative of e in (-n/2, n/2].
integer centered(integer e, integer n) { return 2 * e > n ? e - n : e; }

bool within_cap(const CirculantGraph& g, const BfsOptions& options) {
  try {
    check_work_cap(g, options);
    return true;
  } catch (const work_cap_exceeded&) {
    return false;
  } catch (const overflow_error&) {
    return false;
  }
}

void verify_claim(const CirculantGraph& g, std::uint32_t k, const char* which, const StitchOptions& options) {
  if (!options.verify || !within_cap(g, options.bfs)) return;
  if (!verify_diameter_at_most(g, k, options.bfs)) {
    throw stitch_error(std::string(which) + " input does not have diameter <= " + std::to_string(k));
  }
}

}  // namespace

StitchResult stitch(const CirculantGraph& g1, const CirculantGraph& g2, std::uint32_t k1, std::uint32_t k2,
                    const StitchOptions& options) {
  if (g1.directed() != g2.directed()) throw stitch_error("cannot stitch a directed and an undirected graph");
  verify_claim(g1, k1, "first", options);
  verify_claim(g2, k2, "second", options);

  const CirculantGraph* a = &g1;
  const CirculantGraph* b = &g2;
  const bool undirected = !g1.directed();
  StitchResult result{g1, k1 + k2, 0, false, 0, std::nullopt};
  if (undirected && options.auto_swap && g1.degree() % 2 == 0 && g2.degree() % 2 == 1) {
    std::swap(a, b);
    result.swapped = true;
  }

  const integer n1 = a->order(), n2 = b->order();
  const integer n = checked_mul(n1, n2);
  std::vector<integer> raw;
  raw.reserve(a->degree() + b->degree() + 1);
  for (integer e : a->connection().elements()) raw.push_back(mod(checked_mul(n2, centered(e, n1)), n));
  for (integer e : b->connection().elements()) raw.push_back(mod(centered(e, n2), n));

  const bool b_has_involution = n2 % 2 == 0 && b->connection().contains(n2 / 2);
  if (undirected && b_has_involution) {
    // Only the odd S_2 role costs an extra generator; auto_swap avoids it
    // unless both degrees are odd.
    raw.push_back(n - n2 / 2);
    result.delta = 1;
  }
  // Multiples of n2 and magnitudes below n2 never collide; dedup anyway.
  auto product = normalize(n, raw, !undirected);
  if (undirected) {
    for (integer e : product.elements()) {
      if (!product.contains(n - e)) throw std::logic_error("stitched connection set is not symmetric");
    }
  }
  result.degree_bound = g1.degree() + g2.degree() + static_cast<std::size_t>(result.delta);
  if (product.degree() > result.degree_bound) throw std::logic_error("stitched degree exceeds d_1 + d_2 + delta");
  result.graph = CirculantGraph(std::move(product));

  if (options.verify && within_cap(result.graph, options.bfs)) {
    const auto d = diameter(result.graph, options.bfs);
    if (d > result.diameter_bound) throw std::logic_error("stitched diameter exceeds k_1 + k_2");
    result.verified_diameter = d;
  }
  return result;
}

StitchResult stitch_chain(std::span<const StitchPart> parts, const StitchOptions& options) {
  if (parts.size() < 2) throw stitch_error("stitch_chain needs at least two parts");
  StitchResult acc = stitch(parts[0].graph, parts[1].graph, parts[0].diameter, parts[1].diameter, options);
  for (std::size_t i = 2; i < parts.size(); ++i) {
    StitchResult next = stitch(acc.graph, parts[i].graph, acc.diameter_bound, parts[i].diameter, options);
    // Degree bound accumulates over folds: sum d_i plus every delta so far.
    next.degree_bound = acc.degree_bound + parts[i].graph.degree() + static_cast<std::size_t>(next.delta);
    next.delta += acc.delta;
    next.swapped = next.swapped || acc.swapped;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace circulant
