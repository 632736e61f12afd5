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

#include <gtest/gtest.h>

#include "circulant/stitching.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace circulant {
namespace {

using V = std::vector<integer>;

const CirculantGraph z21 = make_graph(21, {1, 2, 8}, false);
const CirculantGraph z55 = make_graph(55, {1, 5, 21}, false);
const CirculantGraph z26 = make_graph(26, {1, 2, 8, 13}, false);
const CirculantGraph z5 = make_graph(5, {1}, false);

TEST(Stitch, RecordGraphs) {
  const StitchResult r = stitch(z21, z55, 2, 3);
  EXPECT_EQ(r.graph.order(), 1155);
  EXPECT_EQ(r.graph.degree(), 12U);
  EXPECT_EQ(r.delta, 0);
  ASSERT_TRUE(r.verified_diameter.has_value());
  EXPECT_EQ(*r.verified_diameter, 5U);
  EXPECT_EQ(r.diameter_bound, 5U);
}

TEST(Stitch, BothOddAddsInvolutionPartner) {
  const StitchResult r = stitch(z26, z26, 2, 2);
  EXPECT_EQ(r.graph.order(), 676);
  EXPECT_EQ(r.graph.degree(), 15U);
  EXPECT_EQ(r.delta, 1);
  ASSERT_TRUE(r.verified_diameter.has_value());
  EXPECT_LE(*r.verified_diameter, 4U);
}

TEST(Stitch, SmallExplicit) {
  const StitchResult r = stitch(make_graph(3, {1}, false), z5, 1, 2);
  EXPECT_EQ(r.graph.order(), 15);
  EXPECT_EQ(r.graph.connection().elements(), (V{1, 5, 10, 14}));
  EXPECT_EQ(*r.verified_diameter, 3U);
}

TEST(Stitch, MixedParitySwapsToAvoidDelta) {
  const StitchResult swapped = stitch(z21, z26, 2, 2);
  EXPECT_TRUE(swapped.swapped);
  EXPECT_EQ(swapped.delta, 0);
  EXPECT_EQ(swapped.graph.degree(), 13U);

  StitchOptions no_swap;
  no_swap.auto_swap = false;
  const StitchResult kept = stitch(z21, z26, 2, 2, no_swap);
  EXPECT_FALSE(kept.swapped);
  EXPECT_EQ(kept.delta, 1);
  EXPECT_EQ(kept.graph.degree(), 14U);
  EXPECT_LE(*kept.verified_diameter, 4U);
}

TEST(Stitch, Errors) {
  EXPECT_THROW(stitch(z21, make_graph(5, {1}, true), 2, 4), stitch_error);
  EXPECT_THROW(stitch(z21, z55, 1, 3), stitch_error);  // z21 has diameter 2
  StitchOptions trust;
  trust.verify = false;
  EXPECT_NO_THROW(stitch(z21, z55, 1, 3, trust));
}

TEST(Stitch, DirectedInputs) {
  const StitchResult r = stitch(make_graph(4, {1}, true), make_graph(6, {1, 2}, true), 3, 3);
  EXPECT_TRUE(r.graph.directed());
  EXPECT_EQ(r.graph.order(), 24);
  EXPECT_LE(*r.verified_diameter, 6U);
}

TEST(StitchChain, Examples) {
  const StitchPart fives[] = {{z5, 2}, {z5, 2}, {z5, 2}};
  const StitchResult a = stitch_chain(fives);
  EXPECT_EQ(a.graph.order(), 125);
  EXPECT_LE(*a.verified_diameter, 6U);
  EXPECT_EQ(a.diameter_bound, 6U);

  const StitchPart mix[] = {{z21, 2}, {z21, 2}, {z55, 3}};
  const StitchResult b = stitch_chain(mix);
  EXPECT_EQ(b.graph.order(), 24255);
  EXPECT_LE(*b.verified_diameter, 7U);

  const StitchPart one[] = {{z5, 2}};
  EXPECT_THROW(stitch_chain(one), stitch_error);
}

// Random undirected and directed parts: order, symmetry, degree and
// diameter invariants, with the diameter rechecked by the oracle.
TEST(StitchProperty, Invariants) {
  oracle::Gen gen(505);
  for (int trial = 0; trial < 120; ++trial) {
    const bool directed = gen.coin();
    const int parts_count = static_cast<int>(gen.range(2, 3));
    std::vector<StitchPart> parts;
    integer order = 1;
    std::size_t degree_sum = 0;
    std::uint32_t k_sum = 0;
    for (int i = 0; i < parts_count; ++i) {
      const std::int64_t n = gen.range(2, parts_count == 2 ? 40 : 12);
      auto raw = gen.distinct(1, n - 1, static_cast<std::size_t>(gen.range(1, std::min<std::int64_t>(3, n - 1))));
      raw.push_back(1);
      const CirculantGraph g = make_graph(n, support::to_int(raw), directed);
      const auto k = static_cast<std::uint32_t>(*oracle::diameter(n, support::elements(g)));
      parts.push_back({g, k});
      order *= n;
      degree_sum += g.degree();
      k_sum += k;
    }
    StitchOptions opts;
    opts.auto_swap = gen.coin();
    const StitchResult r = stitch_chain(parts, opts);
    const CirculantGraph& g = r.graph;
    EXPECT_EQ(g.order(), order);
    EXPECT_EQ(r.diameter_bound, k_sum);
    EXPECT_LE(g.degree(), degree_sum + static_cast<std::size_t>(r.delta));
    EXPECT_EQ(r.degree_bound, degree_sum + static_cast<std::size_t>(r.delta));
    if (!directed) {
      for (integer e : g.connection().elements()) EXPECT_TRUE(g.connection().contains(order - e));
    }
    const auto d = oracle::diameter(static_cast<std::int64_t>(order), support::elements(g));
    ASSERT_TRUE(d.has_value());
    EXPECT_LE(*d, static_cast<std::int64_t>(k_sum));
    EXPECT_EQ(static_cast<std::int64_t>(*r.verified_diameter), *d);
  }
}

// With exactly one odd degree and swapping on, no extra generator.
TEST(StitchProperty, MixedParityKeepsDegreeSum) {
  oracle::Gen gen(606);
  int seen = 0;
  while (seen < 40) {
    const std::int64_t n1 = 2 * gen.range(2, 15), n2 = gen.range(3, 30);
    const CirculantGraph odd = make_graph(n1, {1, n1 / 2}, false);
    const CirculantGraph even = make_graph(n2, {1, gen.range(1, n2 - 1)}, false);
    if (even.degree() % 2 == 1) continue;
    ++seen;
    const auto k1 = diameter(odd), k2 = diameter(even);
    const StitchResult a = stitch(odd, even, k1, k2);
    const StitchResult b = stitch(even, odd, k2, k1);
    EXPECT_EQ(a.graph.degree(), odd.degree() + even.degree());
    EXPECT_EQ(b.graph.degree(), odd.degree() + even.degree());
    EXPECT_EQ(a.delta + b.delta, 0);
  }
}

}  // namespace
}  // namespace circulant
