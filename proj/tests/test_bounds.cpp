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

#include "circulant/bounds.hpp"

namespace circulant {
namespace {

constexpr BoundRow kRows[] = {BoundRow::undirected_limsup, BoundRow::undirected_liminf, BoundRow::directed_liminf};

// k (k!)^{-1/k} by direct product, no log-gamma.
double r_max_direct(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return k / std::pow(f, 1.0 / k);
}

TEST(Bounds, RMax) {
  EXPECT_NEAR(r_max(2), 1.41421, 1e-5);
  EXPECT_DOUBLE_EQ(r_max(1), 1.0);
  EXPECT_NEAR(r_max(9), 2.17016, 1e-5);
  for (int k = 1; k <= 20; ++k) EXPECT_NEAR(r_max(k), r_max_direct(k), 1e-12);
  EXPECT_THROW(r_max(0), std::invalid_argument);
}

TEST(Bounds, CombineR) {
  EXPECT_GE(combine_r(1.26588, 4, 1.27378, 6), 1.27061);
  EXPECT_EQ(combine_r(1.2345, 3, 1.2345, 7), 1.2345);
  EXPECT_NEAR(combine_r(1.20185, 2, 1.20185, 2), 1.20185, 1e-12);
  EXPECT_THROW(combine_r(0, 1, 1, 1), std::domain_error);
}

TEST(Bounds, CombineL) {
  EXPECT_EQ(combine_l(Rational(13, 36), 2, Rational(13, 36), 2), Rational(169, 20736));
  for (int k1 = 1; k1 <= 5; ++k1) {
    for (int k2 = 1; k2 <= 5; ++k2) {
      const Rational t1 = Rational(1) / pow(Rational(k1), k1), t2 = Rational(1) / pow(Rational(k2), k2);
      EXPECT_EQ(combine_l(t1, k1, t2, k2), Rational(1) / pow(Rational(k1 + k2), k1 + k2));
    }
  }
  const Rational l6(3, 32768);
  const Rational l12 = combine_l(l6, 6, l6, 6);
  EXPECT_EQ(l12, Rational(9, integer{1} << 42));
  EXPECT_NEAR(r_from_l(12, l12), r_from_l(6, l6), 1e-12);
  EXPECT_NEAR(r_from_l(6, l6), 1.27378, 1e-5);
}

TEST(Bounds, Ceiling) {
  EXPECT_NEAR(direct_product_ceiling(10).r, 1.26699, 1e-4);
  const Ceiling c2 = direct_product_ceiling(2);
  EXPECT_EQ(*c2.l, Rational(3, 8));
  EXPECT_NEAR(c2.r, 2 * std::sqrt(3.0 / 8), 1e-12);
  const Ceiling c1 = direct_product_ceiling(1);
  EXPECT_EQ(*c1.l, Rational(1));
  EXPECT_DOUBLE_EQ(c1.r, 1.0);
}

TEST(Bounds, DirectEntriesExamples) {
  const BoundsRow d = best_bounds(BoundRow::directed_liminf);
  EXPECT_EQ(*d.at(6).l, Rational(3, 32768));
  EXPECT_NEAR(d.at(6).r, 1.27378, 1e-5);
  const BoundsRow u = best_bounds(BoundRow::undirected_limsup);
  EXPECT_EQ(*u.at(5).l, Rational(109, 134456));
  EXPECT_NEAR(u.at(5).r, 1.20431, 1e-5);
  const BoundsRow l = best_bounds(BoundRow::undirected_liminf);
  EXPECT_NEAR(l.at(8).r, 1.19700, 1e-5);
  EXPECT_EQ(l.at(8).provenance.rfind("stitch", 0), 0U);
  EXPECT_TRUE(l.at(8).external);
}

TEST(Bounds, ExternalEntriesAreFlagged) {
  for (BoundRow row : kRows) {
    for (const BoundValue& v : direct_entries(row)) {
      EXPECT_EQ(v.external, v.provenance.find("external") != std::string::npos) << v.provenance;
      if (!v.external) {
        EXPECT_TRUE(v.l.has_value());
      }
    }
  }
}

TEST(Bounds, TableReproducedTo5Decimals) {
  const ReferenceTable& ref = reference_table();
  for (int k = 2; k <= 9; ++k) EXPECT_TRUE(matches5(r_max(k), ref.r_max[static_cast<std::size_t>(k - 2)])) << k;
  for (BoundRow row : kRows) {
    const BoundsRow best = best_bounds(row);
    for (int k = 2; k <= 9; ++k) {
      const double printed = ref.row(row)[static_cast<std::size_t>(k - 2)];
      EXPECT_TRUE(matches5(best.at(k).r, printed))
          << row_name(row) << " k=" << k << ": " << best.at(k).r << " vs " << printed;
    }
  }
}

TEST(BoundsProperty, ValuesWithinRange) {
  for (BoundRow row : kRows) {
    const BoundsRow best = best_bounds(row, 12);
    for (int k = 1; k <= 12; ++k) {
      const BoundValue& v = best.at(k);
      EXPECT_GE(v.r, 1.0 - 1e-12);
      EXPECT_LE(v.r, r_max(k));
      // R is recomputable from (k, L) to 12 significant digits.
      EXPECT_NEAR(r_from_l(k, v.l_value), v.r, 1e-11 * v.r);
      if (v.l) {
        EXPECT_NEAR(r_from_l(k, *v.l), v.r, 1e-11 * v.r);
      }
    }
  }
}

TEST(BoundsProperty, SelfStitchFixedPoint) {
  for (double r : {1.0, 1.14775, 1.20185, 1.27378, 2.0}) {
    for (int k = 1; k <= 6; ++k) {
      double acc = r;
      int acc_k = k;
      for (int fold = 0; fold < 8; ++fold) {
        acc = combine_r(acc, acc_k, r, k);
        acc_k += k;
        ASSERT_EQ(acc, r);
      }
    }
  }
}

TEST(BoundsProperty, StitchNeverBelowMinimum) {
  for (double r1 = 1.0; r1 < 2.0; r1 += 0.0731) {
    for (double r2 = 1.0; r2 < 2.0; r2 += 0.0917) {
      for (int k1 = 1; k1 <= 5; ++k1) {
        for (int k2 = 1; k2 <= 5; ++k2) {
          const double r = combine_r(r1, k1, r2, k2);
          EXPECT_GE(r, std::min(r1, r2));
          EXPECT_LE(r, std::max(r1, r2));
        }
      }
    }
  }
}

TEST(BoundsProperty, CeilingTendsToOne) {
  EXPECT_LT(direct_product_ceiling(200).r, 1.05);
  EXPECT_FALSE(direct_product_ceiling(200).l.has_value());
  for (int k = 1; k <= 12; ++k) {
    const Ceiling c = direct_product_ceiling(k);
    ASSERT_TRUE(c.l.has_value());
    EXPECT_NEAR(c.r, r_from_l(k, *c.l), 1e-12);
  }
  double prev = direct_product_ceiling(10).r;
  for (int k = 20; k <= 200; k += 10) {
    const double r = direct_product_ceiling(k).r;
    EXPECT_LT(r, prev);
    prev = r;
  }
}

TEST(BoundsProperty, LiminfFloor) {
  const BoundsRow row = best_bounds(BoundRow::undirected_liminf);
  double lowest = 10;
  for (int k = 2; k <= 9; ++k) lowest = std::min(lowest, row.at(k).r);
  EXPECT_TRUE(matches5(lowest, 1.14775)) << lowest;
}

}  // namespace
}  // namespace circulant
