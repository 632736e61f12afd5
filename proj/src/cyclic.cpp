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

#include "circulant/cyclic.hpp"

#include <algorithm>

namespace circulant {

namespace {

void sort_unique(std::vector<integer>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ConnectionSet ConnectionSet::from_expanded(integer n, std::vector<integer> elements, bool directed) {
  if (n < 2) throw invalid_connection_set("modulus must be at least 2, got " + to_string(n));
  if (elements.empty()) throw invalid_connection_set("connection set is empty");
  for (integer e : elements) {
    if (e < 1 || e > n - 1) {
      throw invalid_connection_set("element " + to_string(e) + " outside [1, " + to_string(n - 1) + "]");
    }
  }
  std::vector<integer> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw invalid_connection_set("connection set contains duplicates");
  }
  ConnectionSet s(n, std::move(sorted), directed);
  if (!directed) {
    for (integer e : s.elements_) {
      if (!s.contains(n - e)) {
        throw invalid_connection_set("undirected set contains " + to_string(e) + " but not its negation " +
                                     to_string(n - e));
      }
    }
  }
  return s;
}

bool ConnectionSet::contains(integer e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::vector<integer> ConnectionSet::reduced() const {
  std::vector<integer> out;
  for (integer e : elements_) {
    if (2 * e <= modulus_) out.push_back(e);
  }
  return out;
}

std::strong_ordering operator<=>(const ConnectionSet& a, const ConnectionSet& b) {
  return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
                                                b.elements_.end());
}

ConnectionSet normalize(integer n, std::span<const integer> raw, bool directed) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2, got " + to_string(n));
  std::vector<integer> out;
  out.reserve(directed ? raw.size() : 2 * raw.size());
  for (integer e : raw) {
    const integer r = mod(e, n);
    if (r == 0) continue;
    out.push_back(r);
    if (!directed) out.push_back(n - r);
  }
  sort_unique(out);
  if (out.empty()) throw std::invalid_argument("connection set reduces to the empty set mod " + to_string(n));
  return ConnectionSet(n, std::move(out), directed);
}

ConnectionSet multiplier_image(const ConnectionSet& s, integer u) {
  const integer n = s.modulus();
  if (gcd(u, n) != 1) {
    throw std::invalid_argument("multiplier " + to_string(u) + " is not a unit mod " + to_string(n));
  }
  const integer unit = mod(u, n);
  std::vector<integer> image;
  image.reserve(s.degree());
  for (integer e : s.elements()) image.push_back(mod(checked_mul(unit, e), n));
  return normalize(n, image, s.directed());
}

// ---------------------------------------------------------------------------

void ResidueVector::validate() const {
  if (moduli.size() != coords.size()) throw std::invalid_argument("moduli and coords differ in length");
  if (moduli.empty()) throw std::invalid_argument("residue vector has no coordinates");
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 2) throw std::invalid_argument("modulus " + to_string(moduli[i]) + " is not > 1");
    if (coords[i] < 0 || coords[i] >= moduli[i]) {
      throw std::invalid_argument("coordinate " + to_string(coords[i]) + " outside [0, " + to_string(moduli[i]) +
                                  ")");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gcd(moduli[i], moduli[j]) != 1) {
        throw std::invalid_argument("moduli " + to_string(moduli[j]) + " and " + to_string(moduli[i]) +
                                    " are not coprime");
      }
    }
  }
}

CrtMap::CrtMap(std::vector<integer> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("CRT needs at least one modulus");
  prefix_.reserve(moduli_.size());
  inverse_.reserve(moduli_.size());
  for (integer m : moduli_) {
    if (m < 1) throw std::invalid_argument("CRT modulus must be positive");
    const auto inv = mod_inverse(mod(modulus_, m), m);
    if (!inv) throw std::invalid_argument("CRT moduli are not pairwise coprime");
    prefix_.push_back(modulus_);
    inverse_.push_back(*inv);
    modulus_ = checked_mul(modulus_, m);
  }
}

integer CrtMap::combine(std::span<const integer> coords) const {
  if (coords.size() != moduli_.size()) throw std::invalid_argument("coordinate count does not match moduli");
  // Garner: x_{i+1} = x_i + prefix_i * t with t < m_i, so x stays below the
  // running product and nothing larger than the full modulus is formed.
  integer x = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const integer m = moduli_[i];
    const integer target = mod(coords[i], m);
    const integer t = mod(checked_mul(target - mod(x, m), inverse_[i]), m);
    x += prefix_[i] * t;
  }
  return x;
}

std::vector<integer> CrtMap::split(integer x) const {
  if (x < 0 || x >= modulus_) {
    throw std::invalid_argument("value " + to_string(x) + " outside [0, " + to_string(modulus_) + ")");
  }
  std::vector<integer> out;
  out.reserve(moduli_.size());
  for (integer m : moduli_) out.push_back(x % m);
  return out;
}

integer crt_combine(const ResidueVector& v) {
  v.validate();
  return CrtMap(v.moduli).combine(v.coords);
}

ResidueVector crt_split(integer x, std::span<const integer> moduli) {
  ResidueVector probe{{moduli.begin(), moduli.end()}, std::vector<integer>(moduli.size(), 0)};
  probe.validate();
  CrtMap map(probe.moduli);
  probe.coords = map.split(x);
  return probe;
}

}  // namespace circulant
