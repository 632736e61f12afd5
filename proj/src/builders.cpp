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

#include "circulant/builders.hpp"

#include <algorithm>
#include <numeric>

namespace circulant {

ValidationReport BaseSet::shape() const {
  ValidationReport report;
  if (w < 1) report.add("w = " + to_string(w) + " is not positive");
  if (k < 1) report.add("k = " + std::to_string(k) + " is not positive");
  if (!report.ok()) return report;
  if (b.size() != static_cast<std::size_t>(k) + 2) {
    report.add("base set has " + std::to_string(b.size()) + " elements, expected k + 2 = " + std::to_string(k + 2));
  }
  std::vector<integer> residues;
  for (integer x : b) residues.push_back(mod(x, w));
  std::vector<integer> sorted = residues;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    report.add("base set elements are not distinct mod w");
  }
  if (directed) {
    if (residues.empty() || residues.front() != 0) report.add("directed base set must start with b_1 = 0");
  } else if (std::find(residues.begin(), residues.end(), 0) != residues.end()) {
    report.add("undirected base set must not contain 0");
  }
  return report;
}

std::vector<integer> uncovered_residues(const BaseSet& base) {
  if (const auto report = base.shape(); !report) {
    throw construction_error("malformed base set: " + report.summary());
  }
  const integer w = base.w;
  const auto size = base.b.size();
  std::vector<char> hit(static_cast<std::size_t>(w), 0);
  // Selections of k indices out of k + 2 are complements of omitted pairs.
  for (std::size_t skip1 = 0; skip1 < size; ++skip1) {
    for (std::size_t skip2 = skip1 + 1; skip2 < size; ++skip2) {
      std::vector<integer> chosen;
      for (std::size_t i = 0; i < size; ++i) {
        if (i != skip1 && i != skip2) chosen.push_back(mod(base.b[i], w));
      }
      const std::size_t patterns = base.directed ? 1 : (std::size_t{1} << chosen.size());
      for (std::size_t signs = 0; signs < patterns; ++signs) {
        integer sum = 0;
        for (std::size_t i = 0; i < chosen.size(); ++i) sum += (signs >> i & 1) ? w - chosen[i] : chosen[i];
        hit[static_cast<std::size_t>(mod(sum, w))] = 1;
      }
    }
  }
  std::vector<integer> missing;
  for (integer z = 0; z < w; ++z) {
    if (!hit[static_cast<std::size_t>(z)]) missing.push_back(z);
  }
  return missing;
}

bool check_base_cover(const BaseSet& base) { return uncovered_residues(base).empty(); }

namespace {

ValidationReport cover_report(const BaseSet& base) {
  ValidationReport report = base.shape();
  if (!report.ok()) return report;
  const auto missing = uncovered_residues(base);
  if (!missing.empty()) {
    std::string list;
    for (std::size_t i = 0; i < missing.size() && i < 8; ++i) list += (i ? ", " : "") + to_string(missing[i]);
    if (missing.size() > 8) list += ", ...";
    report.add(std::to_string(missing.size()) + " residues mod " + to_string(base.w) +
               " are not sums of k distinct base elements: " + list);
  }
  return report;
}

}  // namespace

Construction build_direct_product(const BaseSet& base, std::span<const integer> radii) {
  auto ladder = validate_ladder(radii, base.w);
  ConstructionCertificate cert;
  cert.ladder = ladder.report;
  cert.base_cover = cover_report(base);
  cert.claimed_diameter = base.k;
  if (static_cast<std::size_t>(base.k) != radii.size()) {
    cert.ladder.add("base set is for k = " + std::to_string(base.k) + " but " + std::to_string(radii.size()) +
                    " radii were given");
  }
  if (!cert.ladder.ok()) throw construction_error("ladder hypothesis failed: " + cert.ladder.summary());
  if (!cert.base_cover.ok()) throw construction_error("base set hypothesis failed: " + cert.base_cover.summary());

  const LadderParams& p = ladder.params;
  const int k = p.k;
  std::vector<integer> moduli = p.radii;
  moduli.push_back(base.w);
  const CrtMap crt(moduli);
  const integer w = base.w;
  const auto& b = base.b;

  std::vector<integer> raw;
  std::vector<integer> coords(moduli.size(), 0);
  const auto emit = [&](integer sign) {
    std::vector<integer> signed_coords = coords;
    for (auto& c : signed_coords) c *= sign;
    raw.push_back(crt.combine(signed_coords));
  };
  const auto emit_both = [&] {
    emit(1);
    if (!base.directed) emit(-1);
  };

  for (int i = 1; i <= k; ++i) {
    std::fill(coords.begin(), coords.end(), 0);
    coords[k] = mod(b[i - 1], w);
    for (integer x = (base.directed && i == 1) ? 1 : 0; x < p.radii[i - 1]; ++x) {
      coords[i - 1] = x;
      emit_both();
    }
  }
  for (integer x = 0; x < p.c_o; ++x) {
    for (int i = 1; i <= k; ++i) coords[i - 1] = x;
    coords[k] = mod(b[k], w);
    emit_both();
  }
  for (integer x = 0; x < p.c_u; ++x) {
    for (int i = 1; i <= k; ++i) coords[i - 1] = x * i;
    coords[k] = mod(b[k + 1], w);
    emit_both();
  }

  if (std::find(raw.begin(), raw.end(), 0) != raw.end()) {
    throw std::logic_error("generator list contains the identity");
  }
  const integer sum_r = std::accumulate(p.radii.begin(), p.radii.end(), integer{0});
  cert.degree_bound = base.directed ? sum_r + p.c_o + p.c_u - 1 : 2 * (sum_r + p.c_o + p.c_u);
  cert.generator_count = raw.size();
  cert.order = crt.modulus();
  CirculantGraph graph(normalize(crt.modulus(), raw, base.directed));
  cert.degree = graph.degree();
  return Construction{std::move(graph), std::move(cert), p};
}

Construction build_undirected(const BaseSet& base, std::span<const integer> radii) {
  if (base.directed) throw construction_error("build_undirected called with a directed base set");
  return build_direct_product(base, radii);
}

Construction build_directed(const BaseSet& base, std::span<const integer> radii) {
  if (!base.directed) throw construction_error("build_directed called with an undirected base set");
  return build_direct_product(base, radii);
}

CirculantGraph trivial_construction(integer r, int k, bool directed) {
  if (r < 2 || k < 1) throw std::invalid_argument("trivial construction needs r >= 2 and k >= 1");
  integer n = 1;
  for (int i = 0; i < k; ++i) n = checked_mul(n, r);
  std::vector<integer> gens;
  integer place = 1;
  for (int level = 0; level < k; ++level) {
    for (integer h = -(r / 2); h <= r / 2; ++h) {
      if (h != 0) gens.push_back(h * place);
    }
    place *= r;
  }
  return make_graph(n, gens, directed);
}

// ---------------------------------------------------------------------------

bool Congruence::holds(integer q) const {
  const bool member = std::find(residues.begin(), residues.end(), mod(q, modulus)) != residues.end();
  return member != excluded;
}

std::string Congruence::describe() const {
  std::string list;
  for (std::size_t i = 0; i < residues.size(); ++i) list += (i ? "," : "") + to_string(residues[i]);
  return std::string("q ") + (excluded ? "!= " : "= ") + list + " (mod " + to_string(modulus) + ")";
}

std::vector<integer> FamilySpec::radii(integer q) const {
  std::vector<integer> out;
  for (integer delta : offsets) out.push_back(q - delta);
  return out;
}

ValidationReport FamilySpec::check_q(integer q) const {
  ValidationReport report;
  if (q < q_min) report.add("q = " + to_string(q) + " is below q_min = " + to_string(q_min));
  for (const auto& c : conditions) {
    if (!c.holds(q)) report.add("q = " + to_string(q) + " violates " + c.describe());
  }
  return report;
}

std::vector<integer> FamilySpec::valid_q(std::size_t count) const {
  std::vector<integer> out;
  for (integer q = q_min; out.size() < count; ++q) {
    if (check_q(q).ok()) out.push_back(q);
  }
  return out;
}

std::string FamilySpec::predicate() const {
  std::string out = "q >= " + to_string(q_min);
  for (const auto& c : conditions) out += ", " + c.describe();
  return out;
}

const std::vector<FamilySpec>& published_families() {
  using C = Congruence;
  static const std::vector<FamilySpec> families = {
      {"undirected-k3-w57", false, 3, 57, {1, 2, 7, 8, 27}, {0, 4, 6},
       {C{6, {5}}, C{19, {0, 4, 6}, true}}, 17, 10, -12, 4, Rational(57, 1000), {12, -28, -48}},
      {"undirected-k3-w56", false, 3, 56, {1, 2, 7, 14, 15}, {0, 2, 4},
       {C{6, {3, 5}}, C{7, {1, 3, 5, 6}}}, 15, 10, -8, 2, Rational(7, 125), {8, -12, -32}},
      {"undirected-k4-w150", false, 4, 150, {1, 7, 16, 26, 41, 61}, {0, 6, 8, 12},
       {C{30, {19}}}, 49, 12, -40, 6, Rational(25, 3456), {40, -32, -56, -104}},
      {"undirected-k5-w436", false, 5, 436, {1, 15, 43, 48, 77, 109, 152}, {0, 4, 10, 12, 16},
       {C{6, {5}}, C{5, {0, 1}, true}, C{109, {0, 4, 10, 12, 16}, true}}, 77, 14, -68, 8,
       Rational(109, 134456), {68, 12, -72, -100, -156}},
      {"directed-k2-w6", true, 2, 6, {0, 1, 2, 4}, {0, 2},
       {C{6, {1}}}, 7, 4, -1, 2, Rational(3, 8), {1, -7}},
      {"directed-k3-w9", true, 3, 9, {0, 1, 2, 3, 6}, {0, 4, 6},
       {C{6, {5}}}, 17, 5, -7, 4, Rational(9, 125), {7, -13, -23}},
      {"directed-k4-w13", true, 4, 13, {0, 1, 3, 5, 7, 8}, {0, 2, 4, 6},
       {C{6, {5}}, C{13, {0, 2, 4, 6}, true}}, 23, 6, -11, 2, Rational(13, 1296), {11, -1, -13, -25}},
      {"directed-k5-w17", true, 5, 17, {0, 1, 2, 3, 4, 8, 13}, {0, 4, 10, 12, 16},
       {C{6, {5}}, C{5, {0, 1}, true}, C{17, {0, 4, 10, 12, 16}, true}}, 77, 7, -35, 8,
       Rational(17, 16807), {35, 7, -35, -49, -77}},
      {"directed-k6-w24", true, 6, 24, {0, 1, 2, 4, 8, 13, 18, 22}, {0, 6, 12, 18, 24, 30},
       {C{6, {1, 5}}, C{5, {0, 4}, true}}, 181, 8, -85, 6, Rational(3, 32768), {85, 37, -11, -59, -107, -155}},
      {"directed-k7-w30", true, 7, 30, {0, 1, 2, 6, 9, 12, 16, 17, 18}, {0, 2, 6, 18, 20, 30, 42},
       {C{6, {1}}, C{5, {4}}, C{7, {0, 2, 6}, true}, C{11, {9}, true}}, 529, 9, -77, 42,
       Rational(10, 1594323), {77, 59, 23, -85, -103, -193, -301}},
      {"directed-k8-w36", true, 8, 36, {0, 1, 2, 3, 6, 12, 19, 20, 27, 33}, {0, 6, 12, 18, 24, 30, 36, 42},
       {C{6, {1, 5}}, C{5, {3}}, C{7, {0, 1}, true}}, 353, 10, -163, 6, Rational(9, 25000000),
       {163, 103, 43, -17, -77, -137, -197, -257}},
      {"directed-k9-w42", true, 9, 42, {0, 1, 2, 3, 4, 9, 16, 20, 26, 30, 37}, {0, 2, 6, 12, 20, 30, 42, 56, 72},
       {C{6, {1}}, C{5, {3, 4}}, C{7, {1, 3, 4}}, C{11, {1, 6, 9}, true}, C{13, {4, 7}, true}}, 1093, 11, -169,
       72, Rational(42, integer{2357947691}), {169, 147, 103, 37, -51, -161, -293, -447, -623}},
  };
  return families;
}

const FamilySpec& find_family(std::string_view name) {
  for (const auto& f : published_families()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown family \"" + std::string(name) + "\"");
}

integer family_predicted_order(const FamilySpec& family, integer d) {
  Rational value = family.order_coefficient;
  for (integer shift : family.order_shifts) value = value * Rational(checked_add(d, shift));
  if (!value.is_integer()) {
    throw std::domain_error("order polynomial of " + family.name + " at d = " + to_string(d) +
                            " is not an integer (" + value.str() + ")");
  }
  return value.num();
}

Construction family_instantiate(const FamilySpec& family, integer q) {
  if (const auto report = family.check_q(q); !report) {
    throw construction_error(family.name + ": " + report.summary());
  }
  const auto radii = family.radii(q);
  Construction built = build_direct_product(family.base_set(), radii);
  const integer d = family.degree(q);
  if (static_cast<integer>(built.certificate.degree) != d) {
    throw construction_error(family.name + ": built degree " + std::to_string(built.certificate.degree) +
                             " differs from the family degree " + to_string(d));
  }
  const integer predicted = family_predicted_order(family, d);
  if (built.certificate.order != predicted) {
    throw construction_error(family.name + ": order " + to_string(built.certificate.order) +
                             " differs from the order polynomial value " + to_string(predicted));
  }
  return built;
}

}  // namespace circulant
