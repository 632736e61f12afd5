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

#include <cmath>

#include "circulant/builders.hpp"
#include "circulant/sumsets.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace circulant {
namespace {

using L = std::vector<std::int64_t>;

ResidueSet set_of(std::int64_t n, const L& xs) { return ResidueSet::from(n, xs); }

std::set<std::int64_t> as_set(const ResidueSet& s) {
  const auto e = s.elements();
  return {e.begin(), e.end()};
}

// Least |A| with kA = Z_n over every subset containing 0, by size.
int ss_by_subsets(int n, int k) {
  for (int t = 1; t <= n; ++t) {
    std::vector<int> idx(static_cast<std::size_t>(t - 1));
    for (int i = 0; i < t - 1; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      std::set<std::int64_t> a{0};
      for (int i : idx) a.insert(i);
      if (static_cast<int>(oracle::sumset(n, a, k).size()) == n) return t;
      int i = t - 2;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (t - 1) + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t - 1; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return n;
}

TEST(ResidueSet, Basics) {
  ResidueSet s(70);
  EXPECT_TRUE(s.empty());
  s.insert(69);
  s.insert(-1);
  s.insert(140);
  EXPECT_EQ(s.elements(), (L{0, 69}));
  EXPECT_TRUE(s.contains(-71));
  EXPECT_EQ(ResidueSet::full(70).size(), 70);
  EXPECT_TRUE(ResidueSet::full(64).is_full());
  EXPECT_THROW(ResidueSet(0), std::invalid_argument);
  EXPECT_THROW(set_of(5, {1}) + set_of(6, {1}), std::invalid_argument);
}

TEST(Sumset, Examples) {
  EXPECT_TRUE(sumset_power(set_of(7, {0, 1, 2, 3}), 2).is_full());
  EXPECT_TRUE(sumset_power(ResidueSet::full(9), 1).is_full());
  EXPECT_EQ(sumset_power(set_of(4, {0, 2}), 3).elements(), (L{0, 2}));
  EXPECT_THROW(sumset_power(ResidueSet(5), 2), std::invalid_argument);
  EXPECT_THROW(sumset_power(set_of(5, {1}), 0), std::invalid_argument);
}

TEST(Covers, Examples) {
  EXPECT_TRUE(covers(set_of(1, {0}), 5));
  EXPECT_FALSE(covers(set_of(2, {0}), 5));
  EXPECT_FALSE(covers(set_of(5, {0, 1}), 3));
  EXPECT_EQ(sumset_power(set_of(5, {0, 1}), 3).elements(), (L{0, 1, 2, 3}));
}

TEST(SsUpper, DirectedFamilyK2) {
  const Construction c = family_instantiate(find_family("directed-k2-w6"), 7);
  const auto bound = ss_upper_from_graph(c.graph, 2);
  EXPECT_EQ(bound, 28);
  EXPECT_LT(static_cast<double>(bound), 2 * std::sqrt(210.0));
}

TEST(SsUpper, DirectedCycle) {
  for (std::int64_t n = 2; n <= 30; ++n) {
    EXPECT_EQ(ss_upper_from_graph(make_graph(n, {1}, true), static_cast<int>(n - 1)), 2);
  }
}

TEST(SsUpper, DirectedFamilyK3) {
  const Construction c = family_instantiate(find_family("directed-k3-w9"), 17);
  EXPECT_EQ(c.graph.order(), 21879);
  const auto bound = ss_upper_from_graph(c.graph, 3);
  EXPECT_EQ(bound, 79);
  EXPECT_LT(static_cast<double>(bound), 3 * std::cbrt(21879.0));
}

TEST(SsUpper, Errors) {
  EXPECT_THROW(ss_upper_from_graph(make_graph(5, {1}, false), 2), std::invalid_argument);
  EXPECT_THROW(ss_upper_from_graph(make_graph(6, {1}, true), 4), std::invalid_argument);
}

TEST(SumsetProperty, MatchesNaive) {
  oracle::Gen gen(707);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t n = gen.range(1, 150);
    const L a = gen.distinct(0, n - 1, static_cast<std::size_t>(gen.range(1, std::min<std::int64_t>(n, 6))));
    const int k = static_cast<int>(gen.range(1, 5));
    EXPECT_EQ(as_set(sumset_power(set_of(n, a), k)), oracle::sumset(n, {a.begin(), a.end()}, k));
  }
}

TEST(SumsetProperty, MonotoneWithZero) {
  oracle::Gen gen(808);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = gen.range(2, 400);
    L a = gen.distinct(1, n - 1, static_cast<std::size_t>(gen.range(1, std::min<std::int64_t>(n - 1, 5))));
    a.push_back(0);
    const ResidueSet base = set_of(n, a);
    ResidueSet prev = base;
    for (int k = 2; k <= 6; ++k) {
      const ResidueSet next = sumset_power(base, k);
      for (std::int64_t x : prev.elements()) ASSERT_TRUE(next.contains(x));
      prev = next;
    }
  }
}

// Directed diameter <= k exactly when k(S u {0}) covers Z_n.
TEST(SumsetProperty, GraphDuality) {
  oracle::Gen gen(909);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = gen.range(2, 10000);
    auto raw = gen.distinct(1, n - 1, static_cast<std::size_t>(gen.range(1, std::min<std::int64_t>(n - 1, 12))));
    const CirculantGraph g = make_graph(n, support::to_int(raw), true);
    raw.push_back(0);
    const ResidueSet a = set_of(n, raw);
    for (int k = 1; k <= 6; ++k) {
      ASSERT_EQ(verify_diameter_at_most(g, static_cast<std::uint32_t>(k)), covers(a, k)) << n << " k=" << k;
    }
  }
}

// |A| / sqrt(n) for the directed diameter-2 family approaches sqrt(8/3)
// from above.
TEST(SumsetProperty, DirectedK2Ratio) {
  const FamilySpec& f = find_family("directed-k2-w6");
  const auto qs = f.valid_q(20);
  const double limit = std::sqrt(8.0 / 3.0);
  double prev = 1e9;
  for (integer q : qs) {
    const Construction c = family_instantiate(f, q);
    const double ratio = static_cast<double>(c.certificate.degree + 1) / std::sqrt(static_cast<double>(c.graph.order()));
    EXPECT_GT(ratio, limit);
    EXPECT_LT(ratio, prev);
    prev = ratio;
  }
  const Construction last = family_instantiate(f, qs.back());
  const auto a = ss_upper_from_graph(last.graph, 2);
  const double ratio = static_cast<double>(a) / std::sqrt(static_cast<double>(last.graph.order()));
  EXPECT_LT(std::fabs(ratio - limit) / limit, 0.05) << ratio;
}

TEST(SsMinimum, SmallValues) {
  EXPECT_EQ(ss_minimum(1, 2).size, 1);
  EXPECT_EQ(ss_minimum(2, 2).size, 2);
  EXPECT_EQ(ss_minimum(7, 2).size, 4);  // three elements give at most six sums
  EXPECT_EQ(ss_minimum(30, 2).size, 8);
  EXPECT_THROW(ss_minimum(65, 2), std::invalid_argument);
  EXPECT_THROW(ss_minimum(0, 2), std::invalid_argument);
  EXPECT_THROW(ss_minimum(10, 0), std::invalid_argument);
}

TEST(SsMinimumProperty, AgreesWithSubsetEnumeration) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 16; ++n) {
      const CoveringMinimum m = ss_minimum(n, k);
      ASSERT_EQ(m.size, ss_by_subsets(n, k)) << "n=" << n << " k=" << k;
      ASSERT_EQ(static_cast<int>(m.witness.size()), m.size);
      EXPECT_EQ(m.witness.front(), 0);
      EXPECT_TRUE(covers(set_of(n, L(m.witness.begin(), m.witness.end())), k));
    }
  }
}

TEST(SsMinimumProperty, AgreesWithCoverOracleUpTo48) {
  for (int n = 1; n <= 48; ++n) {
    const CoveringMinimum m = ss_minimum(n, 2);
    oracle::SumsetCover ref(n);
    ASSERT_EQ(m.size, ref.solve()) << "n=" << n;
    EXPECT_EQ(oracle::sumset(n, {ref.witness().begin(), ref.witness().end()}, 2).size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(covers(set_of(n, L(m.witness.begin(), m.witness.end())), 2));
  }
}

}  // namespace
}  // namespace circulant
