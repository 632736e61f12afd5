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

#include "circulant/sumsets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace circulant {

namespace {

constexpr std::int64_t kWord = 64;

std::size_t word_count(std::int64_t n) { return static_cast<std::size_t>((n + kWord - 1) / kWord); }

// dst |= bits [lo, hi) of src moved by `shift` (positions stay inside [0, n)).
void or_shifted_range(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, std::int64_t lo,
                      std::int64_t hi, std::int64_t shift) {
  if (lo >= hi) return;
  const std::int64_t first = lo / kWord, last = (hi - 1) / kWord;
  for (std::int64_t w = first; w <= last; ++w) {
    std::uint64_t word = src[static_cast<std::size_t>(w)];
    if (w == first) word &= ~std::uint64_t{0} << (lo % kWord);
    if (w == last) {
      const auto top = (hi - 1) % kWord + 1;
      if (top < kWord) word &= (std::uint64_t{1} << top) - 1;
    }
    if (word == 0) continue;
    const std::int64_t base = w * kWord + shift;
    if (base >= 0) {
      const auto q = static_cast<std::size_t>(base / kWord);
      const auto r = base % kWord;
      dst[q] |= word << r;
      if (r != 0 && q + 1 < dst.size()) dst[q + 1] |= word >> (kWord - r);
    } else {
      dst[0] |= word >> (-base);
    }
  }
}

}  // namespace

ResidueSet::ResidueSet(std::int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  words_.assign(word_count(n), 0);
}

ResidueSet ResidueSet::from(std::int64_t n, std::span<const std::int64_t> elements) {
  ResidueSet s(n);
  for (std::int64_t x : elements) s.insert(x);
  return s;
}

ResidueSet ResidueSet::full(std::int64_t n) {
  ResidueSet s(n);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  const auto tail = n % kWord;
  if (tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

void ResidueSet::insert(std::int64_t x) {
  x %= n_;
  if (x < 0) x += n_;
  words_[static_cast<std::size_t>(x / kWord)] |= std::uint64_t{1} << (x % kWord);
}

bool ResidueSet::contains(std::int64_t x) const {
  x %= n_;
  if (x < 0) x += n_;
  return (words_[static_cast<std::size_t>(x / kWord)] >> (x % kWord)) & 1U;
}

std::int64_t ResidueSet::size() const {
  std::int64_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<std::int64_t> ResidueSet::elements() const {
  std::vector<std::int64_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t word = words_[w]; word != 0; word &= word - 1) {
      out.push_back(static_cast<std::int64_t>(w) * kWord + std::countr_zero(word));
    }
  }
  return out;
}

void ResidueSet::or_translate(const ResidueSet& src, std::int64_t shift) {
  if (src.n_ != n_) throw std::invalid_argument("moduli differ");
  shift %= n_;
  if (shift < 0) shift += n_;
  or_shifted_range(words_, src.words_, 0, n_ - shift, shift);
  or_shifted_range(words_, src.words_, n_ - shift, n_, shift - n_);
}

ResidueSet operator+(const ResidueSet& a, const ResidueSet& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("moduli differ");
  const bool a_small = a.size() <= b.size();
  const ResidueSet& small = a_small ? a : b;
  const ResidueSet& large = a_small ? b : a;
  ResidueSet out(a.n_);
  for (std::int64_t y : small.elements()) {
    out.or_translate(large, y);
    if (out.is_full()) break;
  }
  return out;
}

ResidueSet sumset_power(const ResidueSet& a, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (a.empty()) throw std::invalid_argument("sumset of the empty set");
  // (jA, (j+1)A) pairs, built from the most significant bit of k down.
  ResidueSet lo = a, hi = a + a;
  for (int bit = std::bit_width(static_cast<unsigned>(k)) - 2; bit >= 0; --bit) {
    if ((k >> bit) & 1) {
      lo = lo + hi;
      hi = hi + hi;
    } else {
      hi = lo + hi;
      lo = lo + lo;
    }
  }
  return lo;
}

bool covers(const ResidueSet& a, int k) { return sumset_power(a, k).is_full(); }

std::int64_t ss_upper_from_graph(const CirculantGraph& g, int k, const BfsOptions& options) {
  if (!g.directed()) throw std::invalid_argument("sumset bound needs a directed circulant");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!fits_int64(g.order())) throw std::invalid_argument("order too large for a bitset");
  const auto n = static_cast<std::int64_t>(g.order());
  if (!verify_diameter_at_most(g, static_cast<std::uint32_t>(k), options)) {
    throw std::invalid_argument("graph diameter exceeds k");
  }
  ResidueSet a(n);
  a.insert(0);
  for (integer e : g.connection().elements()) a.insert(static_cast<std::int64_t>(e));
  if (!covers(a, k)) throw std::logic_error("BFS diameter and sumset cover disagree");
  return a.size();
}

// ---------------------------------------------------------------------------
// Exhaustive SS(n, k), n <= 64
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxLayers = 64;
constexpr std::int64_t kGainCap = std::int64_t{1} << 40;
// Orbit checks cost about j^2 phi(n) per node and pay off only near the root.
constexpr int kCanonicalDepth = 7;

// Multisets of size k from t items, saturated at `cap`.
std::int64_t multisets(int t, int k, std::int64_t cap) {
  // C(t + k - 1, k) computed incrementally.
  integer c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (t + i - 1) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<std::int64_t>(c);
}

class CoverSearch {
 public:
  CoverSearch(int n, int k) : n_(n), k_(k) {
    full_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (int u = 1; u < n; ++u) {
      if (std::gcd(u, n) == 1) units_.push_back(u);
    }
  }

  bool run(int t, std::vector<int>& witness) {
    t_ = t;
    for (int j = 0; j <= t; ++j) gain_[static_cast<std::size_t>(j)] = multisets(j, k_, kGainCap);
    chosen_.assign(1, 0);
    std::array<std::uint64_t, kMaxLayers + 1> layers{};
    for (int i = 0; i <= k_; ++i) layers[static_cast<std::size_t>(i)] = 1;
    if (dfs(layers, 0)) {
      witness = chosen_;
      return true;
    }
    return false;
  }

 private:
  std::uint64_t rot(std::uint64_t m, int c) const {
    if (c == 0) return m;
    return ((m << c) | (m >> (n_ - c))) & full_;
  }

  // Sets are compared as ascending lists; the smaller of two equal-size sets
  // owns the lowest element of their symmetric difference. A set is kept only
  // if no image u (A - a) is smaller. Removing the largest element of a
  // minimal set leaves a minimal set, so pruning partial sets is sound.
  bool is_canonical(std::uint64_t set) const {
    std::array<int, kMaxLayers> members{};
    int m = 0;
    for (std::uint64_t w = set; w != 0; w &= w - 1) members[static_cast<std::size_t>(m++)] = std::countr_zero(w);
    for (int ai = 0; ai < m; ++ai) {
      const int a = members[static_cast<std::size_t>(ai)];
      for (int u : units_) {
        if (a == 0 && u == 1) continue;
        std::uint64_t image = 0;
        for (int i = 0; i < m; ++i) {
          const int x = members[static_cast<std::size_t>(i)] - a;
          image |= std::uint64_t{1} << ((u * (x < 0 ? x + n_ : x)) % n_);
        }
        const std::uint64_t diff = image ^ set;
        if (diff != 0 && (image & (diff & (~diff + 1))) != 0) return false;
      }
    }
    return true;
  }

  // k = 2: each future c adds at most |(c + A) u {2c} minus 2A| sums on its
  // own, and future pairs add at most C(f, 2) more.
  bool pair_bound_allows(const std::array<std::uint64_t, kMaxLayers + 1>& layers, int last, int covered,
                         int f) const {
    std::array<int, kMaxLayers + 2> histogram{};
    const std::uint64_t missing = ~layers[2] & full_;
    for (int c = last + 1; c < n_; ++c) {
      const std::uint64_t fresh = (rot(layers[1], c) | (std::uint64_t{1} << (2 * c % n_))) & missing;
      ++histogram[static_cast<std::size_t>(std::popcount(fresh))];
    }
    int budget = covered + f * (f - 1) / 2;
    int left = f;
    for (int g = kMaxLayers + 1; g > 0 && left > 0; --g) {
      const int take = std::min(left, histogram[static_cast<std::size_t>(g)]);
      budget += take * g;
      left -= take;
    }
    return budget >= n_;
  }

  bool dfs(const std::array<std::uint64_t, kMaxLayers + 1>& layers, int last) {
    const auto covered = std::popcount(layers[static_cast<std::size_t>(k_)]);
    if (covered == n_) return true;
    const int j = static_cast<int>(chosen_.size());
    if (j == t_) return false;
    // A set of t residues containing 0 has at most C(t+k-1, k) k-fold sums.
    if (covered + gain_[static_cast<std::size_t>(t_)] - gain_[static_cast<std::size_t>(j)] < n_) return false;
    if (k_ == 2 && !pair_bound_allows(layers, last, covered, t_ - j)) return false;
    for (int c = last + 1; c < n_; ++c) {
      if (n_ - 1 - c < t_ - j - 1) break;
      const std::uint64_t candidate = layers[1] | (std::uint64_t{1} << c);
      if (j < kCanonicalDepth && !is_canonical(candidate)) continue;
      std::array<std::uint64_t, kMaxLayers + 1> next{};
      next[0] = 1;
      for (int i = 1; i <= k_; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        next[ii] = layers[ii] | rot(next[ii - 1], c);
      }
      chosen_.push_back(c);
      if (dfs(next, c)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  int n_;
  int k_;
  int t_ = 0;
  std::uint64_t full_ = 0;
  std::array<std::int64_t, kMaxLayers + 1> gain_{};
  std::vector<int> chosen_;
  std::vector<int> units_;
};

}  // namespace

CoveringMinimum ss_minimum(int n, int k) {
  if (n < 1 || n > 64) throw std::invalid_argument("exhaustive SS needs 1 <= n <= 64");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n == 1) return {1, {0}};
  const int layers = std::min(k, n);  // kA stabilizes after n - 1 steps
  CoverSearch search(n, layers);
  int t = 1;
  while (multisets(t, layers, n) < n) ++t;
  for (;; ++t) {
    std::vector<int> witness;
    if (search.run(t, witness)) return {t, std::move(witness)};
  }
}

}  // namespace circulant
