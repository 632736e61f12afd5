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

#include "circulant/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace circulant {

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back(prefix + v);
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport validate_torus(const TorusParams& p) {
  ValidationReport report;
  if (p.u < 1) report.add("u = " + to_string(p.u) + " is not positive");
  if (p.d < 1) report.add("d = " + to_string(p.d) + " is not positive");
  if (p.m < 1) report.add("m = " + to_string(p.m) + " is not positive");
  if (p.s <= 1) report.add("s = " + to_string(p.s) + " is not > 1");
  if (!report.ok()) return report;
  if (gcd(p.s, p.m * p.d) != 1) {
    report.add("gcd(s, m d) = gcd(" + to_string(p.s) + ", " + to_string(p.m * p.d) + ") != 1");
  }
  const integer need = p.m * p.v() * (p.u - 1);
  if (p.s < need) report.add("s = " + to_string(p.s) + " < m v (u - 1) = " + to_string(need));
  return report;
}

DecompWitness decompose_pair(const TorusParams& p, integer x, integer y) {
  if (const auto report = validate_torus(p); !report) {
    throw std::invalid_argument("invalid torus parameters: " + report.summary());
  }
  const integer r = p.r();
  const integer s = p.s;
  if (x < 0 || x >= r || y < 0 || y >= s) {
    throw std::invalid_argument("(" + to_string(x) + ", " + to_string(y) + ") is not in Z_" + to_string(r) +
                                " x Z_" + to_string(s));
  }
  // (1,1) generates T, so every element is p (1,1) for a unique position p
  // mod r s. Subtracting l (u,v) moves the position back by `stride`.
  const CrtMap cycle({r, s});
  const integer period = cycle.modulus();
  const integer target = cycle.combine(std::vector<integer>{x, y});
  const integer stride = cycle.combine(std::vector<integer>{p.u, p.v()});
  const integer h_bound = p.h_bound();
  const integer ell_bound = p.ell_bound();
  integer h = target;
  for (integer ell = 0; ell < ell_bound; ++ell) {
    if (h < h_bound) return {h, ell};
    h -= stride;
    if (h < 0) h += period;
  }
  throw std::logic_error("no bounded decomposition of (" + to_string(x) + ", " + to_string(y) +
                         ") exists; valid torus parameters guarantee one");
}

// ---------------------------------------------------------------------------

std::string LadderElement::name() const {
  switch (kind) {
    case Kind::o:
      return "o";
    case Kind::u:
      return "u";
    case Kind::e:
      return "e" + std::to_string(index);
  }
  return "?";
}

integer LadderParams::bound(const LadderElement& s) const {
  switch (s.kind) {
    case LadderElement::Kind::o:
      return c_o;
    case LadderElement::Kind::u:
      return c_u;
    case LadderElement::Kind::e:
      return radii.at(static_cast<std::size_t>(s.index - 1));
  }
  return 0;
}

LadderValidation validate_ladder(std::span<const integer> radii, integer w) {
  LadderValidation out;
  auto& report = out.report;
  auto& p = out.params;
  const int k = static_cast<int>(radii.size());
  p.k = k;
  p.radii.assign(radii.begin(), radii.end());
  if (k < 2) {
    report.add("ladder needs k >= 2 radii, got " + std::to_string(k));
    return out;
  }
  if (w < 1) report.add("w = " + to_string(w) + " is not positive");
  for (int i = 1; i <= k; ++i) {
    const integer ri = radii[i - 1];
    if (ri <= 1) report.add("r_" + std::to_string(i) + " = " + to_string(ri) + " is not > 1");
    if (gcd(ri, i) != 1) report.add("gcd(r_" + std::to_string(i) + ", " + std::to_string(i) + ") != 1");
    if (w >= 1 && gcd(ri, w) != 1) {
      report.add("gcd(r_" + std::to_string(i) + ", w) = gcd(" + to_string(ri) + ", " + to_string(w) + ") = " +
                 to_string(gcd(ri, w)) + " != 1");
    }
  }
  p.step.assign(static_cast<std::size_t>(k), std::vector<integer>(static_cast<std::size_t>(k), 0));
  p.c_o = 0;
  p.c_u = radii[0];
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const integer ri = radii[i - 1], rj = radii[j - 1];
      const std::string pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (ri <= rj) report.add("radii not strictly decreasing at " + pair);
      if (gcd(ri, rj) != 1) report.add("r_" + std::to_string(i) + ", r_" + std::to_string(j) + " not coprime");
      const integer diff = ri - rj;
      if (diff <= 0 || diff % (j - i) != 0) {
        report.add("r_i - r_j not a positive multiple of j - i at " + pair);
        continue;
      }
      const integer m = diff / (j - i);
      p.step[i - 1][j - 1] = m;
      if (rj < m * (i - 1) * j) {
        report.add("r_j = " + to_string(rj) + " < m (i - 1) j = " + to_string(m * (i - 1) * j) + " at " + pair);
      }
      p.c_o = std::max(p.c_o, rj + j * m);
    }
  }
  return out;
}

LadderValidation validate_ladder(const LadderParams& claimed, integer w) {
  LadderValidation out = validate_ladder(claimed.radii, w);
  if (claimed.k != out.params.k) out.report.add("claimed k disagrees with the number of radii");
  if (claimed.c_o != out.params.c_o) {
    out.report.add("claimed c_o = " + to_string(claimed.c_o) + " but radii give " + to_string(out.params.c_o));
  }
  if (claimed.c_u != out.params.c_u) {
    out.report.add("claimed c_u = " + to_string(claimed.c_u) + " but radii give " + to_string(out.params.c_u));
  }
  if (claimed.step != out.params.step) out.report.add("claimed m_ij table disagrees with the radii");
  return out;
}

LadderCoefficients decompose_ladder(const LadderParams& p, const ResidueVector& x,
                                    std::span<const LadderElement> omitted) {
  if (const auto check = validate_ladder(p, 1); !check.report) {
    throw std::invalid_argument("invalid ladder: " + check.report.summary());
  }
  x.validate();
  if (x.moduli != p.radii) throw std::invalid_argument("residue vector moduli differ from the ladder radii");
  if (omitted.size() != 2 || omitted[0] == omitted[1]) {
    throw std::invalid_argument("exactly two distinct elements must be omitted");
  }
  for (const auto& s : omitted) {
    if (s.kind == LadderElement::Kind::e ? (s.index < 1 || s.index > p.k) : s.index != 0) {
      throw std::invalid_argument("omitted element " + s.name() + " is not one of o, u, e_1..e_k");
    }
  }
  const auto is_omitted = [&](const LadderElement& s) {
    return std::find(omitted.begin(), omitted.end(), s) != omitted.end();
  };
  const bool use_o = !is_omitted(LadderElement::all_ones());
  const bool use_u = !is_omitted(LadderElement::staircase());

  LadderCoefficients h;
  integer h_o = 0, h_u = 0;
  if (use_o && use_u) {
    // Both e_i and e_j are missing: solve the two-generator torus problem
    // on Z_{r_i} x Z_{r_j} with (u, v) = (i, j).
    const int i = std::min(omitted[0].index, omitted[1].index);
    const int j = std::max(omitted[0].index, omitted[1].index);
    const TorusParams torus{i, j - i, p.radii[j - 1], p.m(i, j)};
    const auto witness = decompose_pair(torus, x.coords[i - 1], x.coords[j - 1]);
    h_o = witness.h;
    h_u = witness.ell;
  } else if (use_o) {
    const int i = omitted[0].kind == LadderElement::Kind::e ? omitted[0].index : omitted[1].index;
    h_o = x.coords[i - 1];
  } else if (use_u) {
    const int i = omitted[0].kind == LadderElement::Kind::e ? omitted[0].index : omitted[1].index;
    const integer ri = p.radii[i - 1];
    h_u = mod(x.coords[i - 1] * *mod_inverse(i, ri), ri);
  }
  if (use_o) h[LadderElement::all_ones()] = h_o;
  if (use_u) h[LadderElement::staircase()] = h_u;
  for (int i = 1; i <= p.k; ++i) {
    const auto e = LadderElement::axis(i);
    if (is_omitted(e)) continue;
    const integer ri = p.radii[i - 1];
    h[e] = mod(x.coords[i - 1] - (use_o ? h_o : 0) - (use_u ? i * h_u : 0), ri);
  }
  return h;
}

std::vector<integer> ladder_reconstruct(const LadderParams& p, const LadderCoefficients& coefficients) {
  std::vector<integer> coords(static_cast<std::size_t>(p.k), 0);
  for (const auto& [s, h] : coefficients) {
    for (int i = 1; i <= p.k; ++i) {
      integer contribution = 0;
      switch (s.kind) {
        case LadderElement::Kind::o:
          contribution = h;
          break;
        case LadderElement::Kind::u:
          contribution = h * i;
          break;
        case LadderElement::Kind::e:
          contribution = s.index == i ? h : 0;
          break;
      }
      coords[i - 1] = mod(coords[i - 1] + contribution, p.radii[i - 1]);
    }
  }
  return coords;
}

}  // namespace circulant
