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

#include "circulant/search.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace circulant {

namespace {

std::int64_t reduce_undirected(std::int64_t x, std::int64_t n) { return std::min(x, n - x); }

// Candidate generator values and the multiplier action on them.
struct Domain {
  std::int64_t n = 0;
  bool directed = false;
  int free = 0;  // generators chosen by the search
  bool involution = false;
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> units;  // excluding 1

  Domain(std::int64_t n_, int d, bool directed_) : n(n_), directed(directed_) {
    if (directed) {
      free = d;
      for (std::int64_t x = 1; x < n; ++x) values.push_back(x);
    } else {
      free = d / 2;
      involution = d % 2 == 1;
      // [1, floor(n/2)], with n/2 reserved for the odd-degree involution.
      for (std::int64_t x = 1; 2 * x < n; ++x) values.push_back(x);
    }
    for (std::int64_t u = 2; u < n; ++u) {
      if (std::gcd(u, n) == 1) units.push_back(u);
    }
  }

  std::int64_t act(std::int64_t u, std::int64_t x) const {
    const std::int64_t y = static_cast<std::int64_t>(static_cast<integer>(u) * x % n);
    return directed ? y : reduce_undirected(y, n);
  }

  void expand(const std::vector<std::int64_t>& gens, std::vector<std::int64_t>& out) const {
    out.clear();
    for (std::int64_t g : gens) {
      out.push_back(g);
      if (!directed) out.push_back(n - g);
    }
    if (involution) out.push_back(n / 2);
  }

  ConnectionSet connection(const std::vector<std::int64_t>& gens) const {
    std::vector<std::int64_t> expanded;
    expand(gens, expanded);
    std::vector<integer> raw(expanded.begin(), expanded.end());
    return normalize(n, raw, directed);
  }
};

// Layered BFS from 0 with reusable buffers.
class FastBfs {
 public:
  /// Vertices within distance k of 0.
  std::int64_t reached(std::int64_t n, const std::vector<std::int64_t>& offsets, int k) {
    seen_.assign(static_cast<std::size_t>(n), 0);
    frontier_.assign(1, 0);
    seen_[0] = 1;
    std::int64_t count = 1;
    for (int layer = 0; layer < k && !frontier_.empty() && count < n; ++layer) {
      next_.clear();
      for (std::int64_t x : frontier_) {
        for (std::int64_t s : offsets) {
          std::int64_t y = x + s;
          if (y >= n) y -= n;
          if (!seen_[static_cast<std::size_t>(y)]) {
            seen_[static_cast<std::size_t>(y)] = 1;
            next_.push_back(y);
          }
        }
      }
      count += static_cast<std::int64_t>(next_.size());
      frontier_.swap(next_);
    }
    return count;
  }

 private:
  std::vector<char> seen_;
  std::vector<std::int64_t> frontier_, next_;
};

void check_shape(std::int64_t n, int d, int k, bool directed) {
  if (k < 1) throw std::invalid_argument("diameter must be >= 1");
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  if (n < 2) throw std::invalid_argument("order must be >= 2");
  if (d > n - 1) throw std::invalid_argument("degree exceeds n - 1");
  if (!directed && d % 2 == 1 && n % 2 == 1) {
    throw std::invalid_argument("odd undirected degree needs an even order");
  }
}

bool shape_feasible(std::int64_t n, int d, bool directed) {
  return n >= 2 && d <= n - 1 && (directed || d % 2 == 0 || n % 2 == 0);
}

class Enumerator {
 public:
  Enumerator(const Domain& dom, int k, std::uint64_t budget, bool prune)
      : dom_(dom), k_(k), budget_(budget), prune_(prune) {}

  ExistsResult run() {
    ExistsResult out;
    chosen_.clear();
    const bool hit = dfs(0);
    out.nodes = nodes_;
    if (hit) {
      out.status = SearchStatus::found;
      out.witness = dom_.connection(chosen_);
    } else {
      out.status = exhausted_ ? SearchStatus::budget_exhausted : SearchStatus::absent;
    }
    return out;
  }

 private:
  // chosen_ is ascending; reject it if some multiplier image is smaller.
  bool is_least() {
    image_.resize(chosen_.size());
    for (std::int64_t u : dom_.units) {
      for (std::size_t i = 0; i < chosen_.size(); ++i) image_[i] = dom_.act(u, chosen_[i]);
      std::sort(image_.begin(), image_.end());
      if (std::lexicographical_compare(image_.begin(), image_.end(), chosen_.begin(), chosen_.end())) return false;
    }
    return true;
  }

  bool spend() {
    if (nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  bool dfs(std::size_t start) {
    if (static_cast<int>(chosen_.size()) == dom_.free) {
      if (!spend()) return false;
      dom_.expand(chosen_, offsets_);
      return bfs_.reached(dom_.n, offsets_, k_) == dom_.n;
    }
    const std::size_t need = static_cast<std::size_t>(dom_.free) - chosen_.size();
    for (std::size_t i = start; i + need <= dom_.values.size(); ++i) {
      chosen_.push_back(dom_.values[i]);
      if (prune_ && !is_least()) {
        chosen_.pop_back();
        continue;
      }
      if (!spend()) return false;
      if (dfs(i + 1)) return true;
      if (exhausted_) return false;
      chosen_.pop_back();
    }
    return false;
  }

  const Domain& dom_;
  int k_;
  std::uint64_t budget_;
  bool prune_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::int64_t> chosen_, image_, offsets_;
  FastBfs bfs_;
};

ExistsResult exists_impl(std::int64_t n, int d, int k, bool directed, std::uint64_t budget, bool prune) {
  check_shape(n, d, k, directed);
  ExistsResult out;
  if (static_cast<integer>(n) > abelian_moore_bound(d, k, directed)) {
    out.status = SearchStatus::absent;
    out.reason = "order exceeds the abelian Moore bound";
    return out;
  }
  const Domain dom(n, d, directed);
  if (dom.free == 0) {
    // Only the involution: Z_2 alone.
    out.nodes = 1;
    if (n == 2) {
      out.status = SearchStatus::found;
      out.witness = dom.connection({});
    }
    return out;
  }
  return Enumerator(dom, k, budget, prune).run();
}

// Steepest descent over single swaps; returns found or budget_exhausted.
ExistsResult heuristic_exists(std::int64_t n, int d, int k, bool directed, std::uint64_t budget,
                              std::uint64_t seed) {
  check_shape(n, d, k, directed);
  ExistsResult out;
  out.status = SearchStatus::budget_exhausted;
  if (static_cast<integer>(n) > abelian_moore_bound(d, k, directed)) {
    out.status = SearchStatus::absent;
    out.reason = "order exceeds the abelian Moore bound";
    return out;
  }
  const Domain dom(n, d, directed);
  if (dom.free == 0 || dom.values.size() < static_cast<std::size_t>(dom.free)) {
    return exists_impl(n, d, k, directed, budget, false);
  }
  std::mt19937_64 rng(seed);
  FastBfs bfs;
  std::vector<std::int64_t> offsets;
  auto beyond = [&](const std::vector<std::int64_t>& gens) {
    ++out.nodes;
    dom.expand(gens, offsets);
    return n - bfs.reached(n, offsets, k);
  };

  std::vector<std::int64_t> pool = dom.values;
  while (out.nodes < budget) {
    // Restart: partial Fisher-Yates draw of distinct values.
    for (int i = 0; i < dom.free; ++i) {
      const auto span = static_cast<std::uint64_t>(pool.size()) - static_cast<std::uint64_t>(i);
      const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng() % span);
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    std::vector<std::int64_t> current(pool.begin(), pool.begin() + dom.free);
    std::int64_t score = beyond(current);
    while (score > 0 && out.nodes < budget) {
      std::int64_t best = score;
      std::size_t best_i = 0;
      std::int64_t best_v = 0;
      for (std::size_t i = 0; i < current.size() && out.nodes < budget; ++i) {
        const std::int64_t keep = current[i];
        for (std::int64_t v : dom.values) {
          if (out.nodes >= budget) break;
          if (std::find(current.begin(), current.end(), v) != current.end()) continue;
          current[i] = v;
          const std::int64_t s = beyond(current);
          if (s < best) {
            best = s;
            best_i = i;
            best_v = v;
          }
        }
        current[i] = keep;
      }
      if (best >= score) break;  // local minimum
      current[best_i] = best_v;
      score = best;
    }
    if (score == 0) {
      std::sort(current.begin(), current.end());
      out.status = SearchStatus::found;
      out.witness = dom.connection(current);
      return out;
    }
  }
  return out;
}

integer binomial_saturated(int a, int b) {
  integer c = 1;
  for (int i = 1; i <= b; ++i) {
    c = checked_mul(c, a - b + i) / i;
  }
  return c;
}

// Lattice points of Z^f with l1 norm <= k.
integer l1_ball(int f, int k) {
  if (k < 0) return 0;
  integer total = 0;
  for (int i = 0; i <= std::min(f, k); ++i) {
    total = checked_add(total, checked_mul(checked_mul(integer{1} << i, binomial_saturated(f, i)),
                                           binomial_saturated(k, i)));
  }
  return total;
}

SearchResult run_shard(const SearchSpec& spec, std::int64_t lo, std::int64_t hi, std::uint64_t budget,
                       const ProgressCallback& progress) {
  SearchResult out;
  out.definitive = true;
  const auto span = static_cast<std::uint64_t>(std::max<std::int64_t>(hi - lo + 1, 1));
  for (std::int64_t n = hi; n >= lo; --n) {
    if (!shape_feasible(n, spec.d, spec.directed)) continue;
    ExistsResult r;
    if (spec.mode == SearchMode::exhaustive) {
      const std::uint64_t left = budget > out.nodes ? budget - out.nodes : 0;
      r = exists_impl(n, spec.d, spec.k, spec.directed, left, true);
    } else {
      const std::uint64_t seed = *spec.seed ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL);
      r = heuristic_exists(n, spec.d, spec.k, spec.directed, std::max<std::uint64_t>(budget / span, 1), seed);
    }
    out.nodes += r.nodes;
    if (progress) progress(SearchProgress{n, r.status, r.nodes});
    if (r.status == SearchStatus::found) {
      out.n_best = n;
      out.witness = std::move(r.witness);
      return out;
    }
    if (r.status == SearchStatus::budget_exhausted) {
      out.definitive = false;
      out.budget_exhausted = true;
      if (spec.mode == SearchMode::exhaustive) return out;
    }
  }
  return out;
}

}  // namespace

ConnectionSet canonical_rep(const ConnectionSet& s) {
  const integer n = s.modulus();
  ConnectionSet best = s;
  for (integer u = 2; u < n; ++u) {
    if (gcd(u, n) != 1) continue;
    ConnectionSet image = multiplier_image(s, u);
    if (image < best) best = std::move(image);
  }
  return best;
}

integer abelian_moore_bound(int d, int k, bool directed) {
  if (d < 1 || k < 0) throw std::invalid_argument("need d >= 1 and k >= 0");
  try {
    if (directed) return binomial_saturated(d + k, k);
    const int f = d / 2;
    if (d % 2 == 0) return l1_ball(f, k);
    return checked_add(l1_ball(f, k), l1_ball(f, k - 1));
  } catch (const overflow_error&) {
    return std::numeric_limits<integer>::max();
  }
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::absent:
      return "absent";
    case SearchStatus::budget_exhausted:
      return "budget_exhausted";
  }
  throw std::invalid_argument("unknown status");
}

ExistsResult exists_graph(std::int64_t n, int d, int k, bool directed, std::uint64_t budget) {
  return exists_impl(n, d, k, directed, budget, true);
}

ExistsResult exists_graph_unpruned(std::int64_t n, int d, int k, bool directed, std::uint64_t budget) {
  return exists_impl(n, d, k, directed, budget, false);
}

ValidationReport SearchSpec::validate() const {
  ValidationReport r;
  if (d < 1) r.add("d must be >= 1");
  if (k < 1) r.add("k must be >= 1");
  if (n_lo < 1) r.add("range start must be >= 1");
  if (n_hi < n_lo) r.add("range is empty or unbounded");
  if (mode == SearchMode::heuristic && !seed) r.add("heuristic mode needs a seed");
  if (jobs < 1) r.add("jobs must be >= 1");
  if (budget < 1) r.add("budget must be >= 1");
  return r;
}

SearchResult merge_results(const SearchResult& lower, const SearchResult& upper) {
  SearchResult out;
  out.nodes = lower.nodes + upper.nodes;
  out.budget_exhausted = lower.budget_exhausted || upper.budget_exhausted;
  if (upper.n_best) {
    out.n_best = upper.n_best;
    out.witness = upper.witness;
    out.definitive = upper.definitive;
  } else {
    out.n_best = lower.n_best;
    out.witness = lower.witness;
    out.definitive = upper.definitive && lower.definitive;
  }
  return out;
}

SearchResult find_max_order(const SearchSpec& spec, const ProgressCallback& progress) {
  if (const auto report = spec.validate(); !report.ok()) throw std::invalid_argument(report.summary());
  const std::int64_t total = spec.n_hi - spec.n_lo + 1;
  const auto shards = static_cast<std::int64_t>(std::min<std::int64_t>(spec.jobs, total));
  const std::uint64_t shard_budget = std::max<std::uint64_t>(spec.budget / static_cast<std::uint64_t>(shards), 1);

  std::mutex mu;
  ProgressCallback guarded;
  if (progress) {
    guarded = [&](const SearchProgress& p) {
      std::lock_guard lock(mu);
      progress(p);
    };
  }

  std::vector<SearchResult> results(static_cast<std::size_t>(shards));
  auto work = [&](std::int64_t i) {
    const std::int64_t lo = spec.n_lo + total * i / shards;
    const std::int64_t hi = spec.n_lo + total * (i + 1) / shards - 1;
    results[static_cast<std::size_t>(i)] = run_shard(spec, lo, hi, shard_budget, guarded);
  };
  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::int64_t i = 0; i < shards; ++i) threads.emplace_back(work, i);
  }
  SearchResult merged = results.front();
  for (std::size_t i = 1; i < results.size(); ++i) merged = merge_results(merged, results[i]);
  return merged;
}

}  // namespace circulant
