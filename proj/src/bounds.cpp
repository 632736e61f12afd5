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

#include "circulant/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circulant/builders.hpp"

namespace circulant {

namespace {

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("diameter must be >= 1");
}

Rational int_pow(int base, int exp) { return pow(Rational(base), exp); }

BoundValue make_value(int k, std::optional<Rational> l, double l_value, std::string provenance, bool external) {
  BoundValue v;
  v.k = k;
  v.l = std::move(l);
  v.l_value = v.l ? v.l->to_double() : l_value;
  v.r = r_from_l(k, v.l_value);
  v.provenance = std::move(provenance);
  v.external = external;
  return v;
}

BoundValue exact_value(int k, const Rational& l, std::string provenance, bool external = false) {
  return make_value(k, l, 0, std::move(provenance), external);
}

// A family contributes to the liminf rows only when every degree can be
// reached by padding: directed families always, undirected ones only with an
// even order (odd degrees need the involution n/2).
bool reaches_all_degrees(const FamilySpec& f) { return f.directed || f.w % 2 == 0; }

}  // namespace

double r_max(int k) {
  require_k(k);
  return k * std::exp(-std::lgamma(k + 1.0) / k);
}

double r_from_l(int k, double l) {
  require_k(k);
  if (!(l > 0)) throw std::domain_error("L must be positive");
  return k * std::exp(std::log(l) / k);
}

double r_from_l(int k, const Rational& l) { return r_from_l(k, l.to_double()); }

double combine_r(double r1, int k1, double r2, int k2) {
  require_k(k1);
  require_k(k2);
  if (!(r1 > 0) || !(r2 > 0)) throw std::domain_error("R must be positive");
  if (r1 == r2) return r1;
  const double lo = std::min(r1, r2), hi = std::max(r1, r2);
  const double out = std::exp((k1 * std::log(r1) + k2 * std::log(r2)) / (k1 + k2));
  return std::clamp(out, lo, hi);
}

Rational combine_l(const Rational& l1, int k1, const Rational& l2, int k2) {
  require_k(k1);
  require_k(k2);
  return l1 * l2 * int_pow(k1, k1) * int_pow(k2, k2) / int_pow(k1 + k2, k1 + k2);
}

Ceiling direct_product_ceiling(int k) {
  require_k(k);
  Ceiling c;
  const double log_l = std::log(k + 1.0) - std::log(2.0) - (k - 1) * std::log(k + 2.0);
  c.l_value = std::exp(log_l);
  c.r = k * std::exp(log_l / k);
  try {
    c.l = Rational(k + 1) / (Rational(2) * int_pow(k + 2, k - 1));
  } catch (const overflow_error&) {
    c.l.reset();
  }
  return c;
}

std::string row_name(BoundRow row) {
  switch (row) {
    case BoundRow::undirected_limsup:
      return "undirected-limsup";
    case BoundRow::undirected_liminf:
      return "undirected-liminf";
    case BoundRow::directed_liminf:
      return "directed-liminf";
  }
  throw std::invalid_argument("unknown bound row");
}

std::vector<BoundValue> direct_entries(BoundRow row) {
  std::vector<BoundValue> out;
  const bool directed = row == BoundRow::directed_liminf;
  if (row == BoundRow::undirected_limsup) {
    out.push_back(exact_value(2, Rational(13, 36), "external finite-field construction", true));
  } else if (row == BoundRow::undirected_liminf) {
    out.push_back(make_value(2, Rational(3582, 10000), 0, "external data (lower bound, 5 decimals)", true));
  }
  for (const FamilySpec& f : published_families()) {
    if (f.directed != directed) continue;
    if (row != BoundRow::undirected_limsup && !reaches_all_degrees(f)) continue;
    const Rational l = Rational(f.w) / pow(Rational(f.degree_slope), f.k);
    out.push_back(exact_value(f.k, l, "direct product " + f.name));
  }
  return out;
}

BoundsRow best_bounds(BoundRow row, int max_k) {
  require_k(max_k);
  BoundsRow result{row, {}};
  // Trivial base-r construction: order r^k, degree about k r, so L = k^-k.
  for (int k = 1; k <= max_k; ++k) {
    result.values.push_back(exact_value(k, Rational(1) / int_pow(k, k), "trivial"));
  }
  for (const BoundValue& v : direct_entries(row)) {
    if (v.k > max_k) continue;
    BoundValue& slot = result.values[static_cast<std::size_t>(v.k - 1)];
    if (v.r > slot.r) slot = v;
  }
  for (int k = 2; k <= max_k; ++k) {
    BoundValue& slot = result.values[static_cast<std::size_t>(k - 1)];
    for (int k1 = 1; k1 <= k / 2; ++k1) {
      const int k2 = k - k1;
      const BoundValue& a = result.values[static_cast<std::size_t>(k1 - 1)];
      const BoundValue& b = result.values[static_cast<std::size_t>(k2 - 1)];
      const double r = combine_r(a.r, k1, b.r, k2);
      if (r <= slot.r) continue;
      std::optional<Rational> l;
      if (a.l && b.l) {
        try {
          l = combine_l(*a.l, k1, *b.l, k2);
        } catch (const overflow_error&) {
          l.reset();
        }
      }
      const double l_value = std::pow(r / k, k);
      BoundValue v = make_value(k, l, l_value, "stitch " + std::to_string(k1) + "+" + std::to_string(k2),
                                a.external || b.external);
      v.r = r;  // keep the log-domain value so fixed points stay exact
      slot = v;
    }
  }
  return result;
}

const std::vector<double>& ReferenceTable::row(BoundRow r) const {
  switch (r) {
    case BoundRow::undirected_limsup:
      return undirected_limsup;
    case BoundRow::undirected_liminf:
      return undirected_liminf;
    case BoundRow::directed_liminf:
      return directed_liminf;
  }
  throw std::invalid_argument("unknown bound row");
}

const ReferenceTable& reference_table() {
  static const ReferenceTable table{
      {1.41421, 1.65096, 1.80720, 1.91926, 2.00415, 2.07100, 2.12520, 2.17016},
      {1.20185, 1.15455, 1.20185, 1.20431, 1.20185, 1.20360, 1.20185, 1.20321},
      {1.19700, 1.14775, 1.19700, 1.20431, 1.19700, 1.20222, 1.19700, 1.20105},
      {1.22474, 1.24805, 1.26588, 1.25881, 1.27378, 1.26436, 1.26588, 1.26514},
  };
  return table;
}

bool matches5(double x, double printed) { return std::fabs(x - printed) < 1e-5; }

}  // namespace circulant
