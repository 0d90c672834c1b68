// Copyright 2026 The chipfire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire {

struct RankResult {
  int rank = -1;
  /// Effective F of degree rank + 1 such that D - F has no effective representative.
  std::optional<Divisor> obstruction;
};

struct RankOptions {
  /// Distinct (reduced class) entries the memo table may hold before giving up.
  std::size_t max_states = 4'000'000;
};

namespace detail {

struct ChipsHash {
  std::size_t operator()(const std::vector<Chips>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Chips c : v) {
      h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Positive-rank test for an effective chip vector: every vertex must end up
/// with a chip after reducing at it. Short-circuits with a single burn when
/// the fire from a chipless vertex already consumes everything.
inline bool positive_rank_effective(Burner& burner, std::span<const Chips> chips, std::vector<Chips>& work) {
  const std::size_t n = burner.graph().num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    if (chips[v] > 0) continue;
    if (burner.burns_all(chips, v)) return false;
    work.assign(chips.begin(), chips.end());
    burner.settle(work, v);
    if (work[v] < 1) return false;
  }
  return true;
}

/// Memoized rank recursion: r(D) >= k iff r(D - (v)) >= k - 1 for every v,
/// bottoming out at "has an effective representative". Classes are keyed by
/// their reduced form at vertex 0.
class RankSolver {
 public:
  RankSolver(const Multigraph& g, RankOptions opts) : g_(g), opts_(opts), burner_(g) {}

  RankResult solve(const Divisor& d) {
    const std::size_t n = g_.num_vertices();
    std::vector<Chips> key = d.chips();
    burner_.reduce(key, 0);
    if (key[0] < 0) return {-1, Divisor(n)};
    Divisor obstruction;
    int k = 1;
    while (at_least(key, k, obstruction)) ++k;
    return {k - 1, obstruction};
  }

 private:
  struct Entry {
    int proven_at_least = -1;
    int proven_below = INT_MAX;
    Divisor obstruction;
  };

  bool at_least(const std::vector<Chips>& key, int k, Divisor& obstruction) {
    const std::size_t n = g_.num_vertices();
    Chips degree = 0;
    for (Chips c : key) degree += c;
    if (degree < k) {
      obstruction = Divisor::point(n, 0, k);
      return false;
    }
    if (k == 0) {
      if (key[0] >= 0) return true;
      obstruction = Divisor(n);
      return false;
    }
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      if (k <= it->second.proven_at_least) return true;
      if (k >= it->second.proven_below) {
        obstruction = it->second.obstruction;
        obstruction[0] += k - it->second.proven_below;
        return false;
      }
    }
    bool result = true;
    Divisor failure;
    std::vector<Chips> next;
    for (Vertex v = 0; v < n && result; ++v) {
      next = key;
      next[v] -= 1;
      burner_.reduce(next, 0);
      if (!at_least(next, k - 1, failure)) {
        failure[v] += 1;
        result = false;
      }
    }
    if (memo_.size() >= opts_.max_states && memo_.find(key) == memo_.end()) {
      throw BudgetExceeded("rank computation exceeded " + std::to_string(opts_.max_states) + " memo states");
    }
    Entry& entry = memo_[key];
    if (result) {
      entry.proven_at_least = std::max(entry.proven_at_least, k);
    } else if (k < entry.proven_below) {
      entry.proven_below = k;
      entry.obstruction = failure;
    }
    if (!result) obstruction = failure;
    return result;
  }

  const Multigraph& g_;
  RankOptions opts_;
  Burner burner_;
  std::unordered_map<std::vector<Chips>, Entry, ChipsHash> memo_;
};

}  // namespace detail

/// True iff, for every vertex v, the v-reduced form of D keeps a chip on v.
inline bool has_positive_rank(const Multigraph& g, const Divisor& d) {
  check_divisor(g, d);
  if (d.degree() < 1) return false;
  detail::Burner burner(g);
  std::vector<Chips> base = d.chips();
  burner.reduce(base, 0);
  if (base[0] < 1) return false;
  std::vector<Chips> work;
  return detail::positive_rank_effective(burner, base, work);
}

/// Exact Baker–Norine rank with an obstruction certifying the upper bound.
inline RankResult rank(const Multigraph& g, const Divisor& d, RankOptions opts = {}) {
  check_divisor(g, d);
  return detail::RankSolver(g, opts).solve(d);
}

/// r(D) - r(K - D) - deg(D) + g - 1, which Riemann–Roch says is always zero.
inline std::int64_t riemann_roch_residual(const Multigraph& g, const Divisor& d, RankOptions opts = {}) {
  check_divisor(g, d);
  const Divisor k = canonical_divisor(g);
  const std::int64_t r = rank(g, d, opts).rank;
  const std::int64_t r_dual = rank(g, k - d, opts).rank;
  return r - r_dual - d.degree() + g.genus() - 1;
}

}  // namespace chipfire
