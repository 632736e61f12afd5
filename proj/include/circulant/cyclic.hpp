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
 * @file cyclic.hpp
 * @brief Connection sets over Z_n and the CRT isomorphism
 *        Z_{m_1} x ... x Z_{m_t} -> Z_{m_1 ... m_t}.
 *
 * A circulant graph Cay(Z_n, S) is fully described by n and S, so
 * CirculantGraph is a thin wrapper around a validated ConnectionSet.
 * Elements are stored as reduced residues in [1, n-1], sorted.
 */

#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

#include "circulant/integer.hpp"

namespace circulant {

class invalid_connection_set : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConnectionSet {
 public:
  /// Accepts an already expanded set and checks every invariant: n >= 2,
  /// elements in [1, n-1] without duplicates, closure under negation when
  /// undirected. Throws invalid_connection_set.
  static ConnectionSet from_expanded(integer n, std::vector<integer> elements, bool directed);

  integer modulus() const { return modulus_; }
  const std::vector<integer>& elements() const { return elements_; }
  bool directed() const { return directed_; }
  std::size_t degree() const { return elements_.size(); }
  bool contains(integer e) const;

  /// Elements in [1, n/2] (the reduced generator list for undirected sets).
  std::vector<integer> reduced() const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
  /// Lexicographic on the sorted element sequence; only meaningful for
  /// sets over the same modulus.
  friend std::strong_ordering operator<=>(const ConnectionSet& a, const ConnectionSet& b);

 private:
  ConnectionSet(integer n, std::vector<integer> elements, bool directed)
      : modulus_(n), elements_(std::move(elements)), directed_(directed) {}

  integer modulus_ = 0;
  std::vector<integer> elements_;
  bool directed_ = false;

  friend ConnectionSet normalize(integer, std::span<const integer>, bool);
};

/// Reduces mod n, drops zeros and duplicates, sorts, and for undirected
/// sets closes under e -> n - e. Throws std::invalid_argument when n < 2 or
/// nothing survives the reduction.
ConnectionSet normalize(integer n, std::span<const integer> raw, bool directed);

inline ConnectionSet normalize(integer n, std::initializer_list<integer> raw, bool directed) {
  return normalize(n, std::span<const integer>(raw.begin(), raw.size()), directed);
}

class CirculantGraph {
 public:
  explicit CirculantGraph(ConnectionSet connection) : connection_(std::move(connection)) {}

  const ConnectionSet& connection() const { return connection_; }
  integer order() const { return connection_.modulus(); }
  std::size_t degree() const { return connection_.degree(); }
  bool directed() const { return connection_.directed(); }

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

 private:
  ConnectionSet connection_;
};

inline CirculantGraph make_graph(integer n, std::span<const integer> gens, bool directed) {
  return CirculantGraph(normalize(n, gens, directed));
}

inline CirculantGraph make_graph(integer n, std::initializer_list<integer> gens, bool directed) {
  return CirculantGraph(normalize(n, gens, directed));
}

/// Image of S under the multiplier x -> u x; requires gcd(u, n) = 1.
ConnectionSet multiplier_image(const ConnectionSet& s, integer u);

// ---------------------------------------------------------------------------
// Chinese remaindering
// ---------------------------------------------------------------------------

/// An element of Z_{r_1} x ... x Z_{r_t} with pairwise coprime r_i > 1.
struct ResidueVector {
  std::vector<integer> moduli;
  std::vector<integer> coords;

  /// Throws std::invalid_argument on shape, range, or coprimality violations.
  void validate() const;
};

/// Precomputed Garner basis for a fixed list of pairwise coprime moduli.
/// combine() never forms a product larger than the full modulus.
class CrtMap {
 public:
  explicit CrtMap(std::vector<integer> moduli);

  const std::vector<integer>& moduli() const { return moduli_; }
  integer modulus() const { return modulus_; }

  /// Unique x in [0, prod m_i) with x = coords[i] (mod m_i); coords may be
  /// any integers, they are reduced first.
  integer combine(std::span<const integer> coords) const;
  std::vector<integer> split(integer x) const;

 private:
  std::vector<integer> moduli_;
  std::vector<integer> prefix_;   // prefix_[i] = m_0 ... m_{i-1}
  std::vector<integer> inverse_;  // inverse_[i] = prefix_[i]^{-1} mod m_i
  integer modulus_ = 1;
};

integer crt_combine(const ResidueVector& v);
ResidueVector crt_split(integer x, std::span<const integer> moduli);

}  // namespace circulant
