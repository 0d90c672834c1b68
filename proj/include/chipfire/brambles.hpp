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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "chipfire/multigraph.hpp"

namespace chipfire {

/// A family of vertex sets of a host graph.
struct BrambleFamily {
  std::vector<std::vector<Vertex>> elements;
};

enum class BrambleKind { not_bramble, bramble, strict_bramble };

inline std::string to_string(BrambleKind kind) {
  switch (kind) {
    case BrambleKind::not_bramble: return "not_bramble";
    case BrambleKind::bramble: return "bramble";
    case BrambleKind::strict_bramble: return "strict_bramble";
  }
  return "?";
}

namespace detail {

inline std::vector<bool> element_mask(const Multigraph& g, const std::vector<Vertex>& element) {
  std::vector<bool> mask(g.num_vertices(), false);
  for (Vertex v : element) {
    if (v >= g.num_vertices()) throw InvalidInput("bramble element vertex " + std::to_string(v) + " out of range");
    mask[v] = true;
  }
  return mask;
}

}  // namespace detail

/// strict_bramble if every element is connected and all pairs intersect;
/// bramble if all pairs intersect or are joined by an edge; not_bramble
/// otherwise (including empty or disconnected elements).
inline BrambleKind classify(const Multigraph& g, const BrambleFamily& family) {
  std::vector<std::vector<bool>> masks;
  for (const auto& element : family.elements) masks.push_back(detail::element_mask(g, element));
  if (masks.empty()) return BrambleKind::not_bramble;
  for (const auto& mask : masks) {
    if (!g.induces_connected(mask)) return BrambleKind::not_bramble;
  }
  bool strict = true;
  const std::size_t n = g.num_vertices();
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = a + 1; b < masks.size(); ++b) {
      bool meet = false;
      for (Vertex v = 0; v < n && !meet; ++v) meet = masks[a][v] && masks[b][v];
      if (meet) continue;
      strict = false;
      bool touch = false;
      for (Vertex u = 0; u < n && !touch; ++u) {
        if (!masks[a][u]) continue;
        for (const auto& nb : g.neighbors(u)) {
          if (masks[b][nb.vertex]) {
            touch = true;
            break;
          }
        }
      }
      if (!touch) return BrambleKind::not_bramble;
    }
  }
  return strict ? BrambleKind::strict_bramble : BrambleKind::bramble;
}

struct HittingSetOptions {
  std::uint64_t max_nodes = 50'000'000;
};

namespace detail {

/// Exact minimum hitting set over at most 64 vertices. Branches on the unhit
/// set with the fewest admissible vertices; earlier siblings' vertices are
/// forbidden in later branches so each hitting set is visited once.
class HittingSetSolver {
 public:
  HittingSetSolver(std::vector<std::uint64_t> sets, HittingSetOptions opts) : opts_(opts) {
    std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
      return std::popcount(a) < std::popcount(b);
    });
    // Supersets of another set are hit automatically.
    for (std::uint64_t s : sets) {
      const bool dominated = std::any_of(sets_.begin(), sets_.end(), [&](std::uint64_t t) { return (t & s) == t; });
      if (!dominated) sets_.push_back(s);
    }
  }

  int solve() {
    best_ = greedy();
    search(0, 0, 0);
    return best_;
  }

 private:
  int greedy() const {
    std::uint64_t chosen = 0;
    int count = 0;
    while (true) {
      int counts[64] = {};
      bool any = false;
      for (std::uint64_t s : sets_) {
        if (s & chosen) continue;
        any = true;
        for (std::uint64_t m = s; m; m &= m - 1) ++counts[std::countr_zero(m)];
      }
      if (!any) return count;
      chosen |= std::uint64_t{1} << (std::max_element(counts, counts + 64) - counts);
      ++count;
    }
  }

  int lower_bound(std::uint64_t chosen, std::uint64_t forbidden) const {
    // Pairwise-disjoint unhit sets each need their own vertex.
    std::uint64_t used = 0;
    int disjoint = 0;
    std::size_t unhit = 0;
    int counts[64] = {};
    for (std::uint64_t s : sets_) {
      if (s & chosen) continue;
      ++unhit;
      const std::uint64_t avail = s & ~forbidden;
      for (std::uint64_t m = avail; m; m &= m - 1) ++counts[std::countr_zero(m)];
      if ((avail & used) == 0) {
        used |= avail;
        ++disjoint;
      }
    }
    if (unhit == 0) return 0;
    const int cover = std::max(1, *std::max_element(counts, counts + 64));
    const int by_cover = static_cast<int>((unhit + cover - 1) / cover);
    return std::max(disjoint, by_cover);
  }

  void search(std::uint64_t chosen, std::uint64_t forbidden, int size) {
    if (++nodes_ > opts_.max_nodes) throw BudgetExceeded("hitting-set search exceeded its node budget");
    if (size + lower_bound(chosen, forbidden) >= best_) {
      // A complete hitting set has bound 0 and size < best_, so it never lands here.
      return;
    }
    std::uint64_t pick = 0;
    int pick_size = 65;
    for (std::uint64_t s : sets_) {
      if (s & chosen) continue;
      const std::uint64_t avail = s & ~forbidden;
      const int k = std::popcount(avail);
      if (k == 0) return;
      if (k < pick_size) {
        pick_size = k;
        pick = avail;
      }
    }
    if (pick_size == 65) {
      best_ = size;
      return;
    }
    std::uint64_t local_forbidden = forbidden;
    for (std::uint64_t m = pick; m; m &= m - 1) {
      const std::uint64_t bit = m & (~m + 1);
      search(chosen | bit, local_forbidden, size + 1);
      local_forbidden |= bit;
    }
  }

  HittingSetOptions opts_;
  std::vector<std::uint64_t> sets_;
  int best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Size of the smallest vertex set meeting every element (exact).
inline int order(const Multigraph& g, const BrambleFamily& family, HittingSetOptions opts = {}) {
  if (classify(g, family) == BrambleKind::not_bramble) throw InvalidInput("family is not a bramble");
  if (g.num_vertices() > 64) throw BudgetExceeded("bramble order limited to hosts with at most 64 vertices");
  std::vector<std::uint64_t> sets;
  for (const auto& element : family.elements) {
    std::uint64_t mask = 0;
    for (Vertex v : element) mask |= std::uint64_t{1} << v;
    sets.push_back(mask);
  }
  return detail::HittingSetSolver(std::move(sets), opts).solve();
}

/// On T□T′ (row-major), the family of crosses ({v}□T′) ∪ (T□{v′}) for all
/// v in T, v′ in T′. A strict bramble of order min(|V(T)|, |V(T′)|).
inline BrambleFamily tree_product_bramble(const Multigraph& t1, const Multigraph& t2) {
  if (!t1.is_tree() || !t2.is_tree()) throw InvalidInput("tree_product_bramble needs two trees");
  const ProductIndex idx(t1.num_vertices(), t2.num_vertices());
  BrambleFamily family;
  for (Vertex v = 0; v < t1.num_vertices(); ++v) {
    for (Vertex w = 0; w < t2.num_vertices(); ++w) {
      std::vector<Vertex> cross;
      for (Vertex x = 0; x < t2.num_vertices(); ++x) cross.push_back(idx(v, x));
      for (Vertex u = 0; u < t1.num_vertices(); ++u) {
        if (u != v) cross.push_back(idx(u, w));
      }
      std::sort(cross.begin(), cross.end());
      family.elements.push_back(std::move(cross));
    }
  }
  return family;
}

}  // namespace chipfire
