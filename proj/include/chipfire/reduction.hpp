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
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

/// Outcome of one burning pass.
struct BurnReport {
  Vertex source = 0;
  std::vector<Vertex> burned;
  std::vector<Vertex> unburned;
  /// (vertex, burning edges incident to it when it caught fire); the source
  /// is listed first with count 0.
  std::vector<std::pair<Vertex, Chips>> ignition_order;

  bool all_burned() const { return unburned.empty(); }
};

namespace detail {

/// Scratch buffers for repeated burning and reduction on one graph. Not
/// thread-safe; give each worker its own.
class Burner {
 public:
  explicit Burner(const Multigraph& g)
      : g_(&g), burned_(g.num_vertices(), 0), edges_(g.num_vertices(), 0) {
    queue_.reserve(g.num_vertices());
  }

  const Multigraph& graph() const { return *g_; }

  /// Fire spreads from q; a vertex ignites once its burning edges exceed its
  /// chips. Assumes chips are nonnegative off q. Returns the burned count.
  std::size_t burn(std::span<const Chips> chips, Vertex q,
                   std::vector<std::pair<Vertex, Chips>>* trace = nullptr) {
    std::fill(burned_.begin(), burned_.end(), 0);
    std::fill(edges_.begin(), edges_.end(), 0);
    queue_.clear();
    burned_[q] = 1;
    queue_.push_back(q);
    if (trace) trace->emplace_back(q, 0);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex u = queue_[head];
      for (const auto& nb : g_->neighbors(u)) {
        const Vertex w = nb.vertex;
        if (burned_[w]) continue;
        edges_[w] += nb.mult;
        if (edges_[w] > chips[w]) {
          burned_[w] = 1;
          queue_.push_back(w);
          if (trace) trace->emplace_back(w, edges_[w]);
        }
      }
    }
    return queue_.size();
  }

  /// True iff the fire from q consumes the whole graph.
  bool burns_all(std::span<const Chips> chips, Vertex q) { return burn(chips, q) == g_->num_vertices(); }

  bool is_burned(Vertex v) const { return burned_[v] != 0; }

  /// Replaces `chips` by the q-reduced representative of its class.
  void reduce(std::span<Chips> chips, Vertex q) {
    clear_debt(chips, q);
    settle(chips, q);
  }

  /// Second phase only: input must already be nonnegative off q.
  void settle(std::span<Chips> chips, Vertex q) {
    const std::size_t n = g_->num_vertices();
    while (burn(chips, q) != n) {
      // The unburned set can legally fire; fire it as many times as stays legal.
      Chips times = std::numeric_limits<Chips>::max();
      for (Vertex v = 0; v < n; ++v) {
        if (!burned_[v] && edges_[v] > 0) times = std::min(times, chips[v] / edges_[v]);
      }
      for (Vertex v = 0; v < n; ++v) {
        if (burned_[v] || edges_[v] == 0) continue;
        for (const auto& nb : g_->neighbors(v)) {
          if (!burned_[nb.vertex]) continue;
          const Chips flow = mul_chips(times, nb.mult);
          chips[v] -= flow;
          chips[nb.vertex] = add_chips(chips[nb.vertex], flow);
        }
      }
    }
  }

 private:
  /// First phase: sweep BFS layers from the outside in. Firing the ball of
  /// radius d - 1 around q only feeds layer d, so one pass per layer leaves
  /// every vertex off q out of debt.
  void clear_debt(std::span<Chips> chips, Vertex q) {
    const std::size_t n = g_->num_vertices();
    bool debt = false;
    for (Vertex v = 0; v < n && !debt; ++v) debt = v != q && chips[v] < 0;
    if (!debt) return;
    const auto dist = g_->distances_from(q);
    const std::size_t max_dist = *std::max_element(dist.begin(), dist.end());
    std::vector<bool> ball(n, false);
    for (std::size_t d = max_dist; d >= 1; --d) {
      Chips times = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (dist[v] != d || chips[v] >= 0) continue;
        Chips into_ball = 0;
        for (const auto& nb : g_->neighbors(v)) {
          if (dist[nb.vertex] < d) into_ball += nb.mult;
        }
        times = std::max(times, (-chips[v] + into_ball - 1) / into_ball);
      }
      if (times == 0) continue;
      for (Vertex v = 0; v < n; ++v) ball[v] = dist[v] < d;
      fire_mask(*g_, chips, ball, times);
    }
  }

  const Multigraph* g_;
  std::vector<char> burned_;
  std::vector<Chips> edges_;
  std::vector<Vertex> queue_;
};

inline void check_vertex(const Multigraph& g, Vertex v) {
  if (v >= g.num_vertices()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
}

}  // namespace detail

/// Dhar's burning process from q. Requires D(v) >= 0 for every v != q.
inline BurnReport dhar_burn(const Multigraph& g, const Divisor& d, Vertex q) {
  check_divisor(g, d);
  detail::check_vertex(g, q);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v != q && d[v] < 0) {
      throw InvalidInput("burning requires nonnegative chips off the source; vertex " + std::to_string(v) +
                         " has " + std::to_string(d[v]));
    }
  }
  detail::Burner burner(g);
  BurnReport report;
  report.source = q;
  burner.burn(d.chips(), q, &report.ignition_order);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    (burner.is_burned(v) ? report.burned : report.unburned).push_back(v);
  }
  return report;
}

/// The unique divisor equivalent to D that is nonnegative off q and from
/// which the fire started at q burns everything.
inline Divisor q_reduce(const Multigraph& g, Divisor d, Vertex q) {
  check_divisor(g, d);
  detail::check_vertex(g, q);
  detail::Burner(g).reduce(d.chips(), q);
  return d;
}

/// Equivalence via reduced forms at vertex 0.
inline bool is_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) {
  check_divisor(g, a);
  check_divisor(g, b);
  if (a.degree() != b.degree()) return false;
  return q_reduce(g, a, 0) == q_reduce(g, b, 0);
}

inline bool has_effective_rep(const Multigraph& g, const Divisor& d) {
  check_divisor(g, d);
  if (d.degree() < 0) return false;
  return q_reduce(g, d, 0)[0] >= 0;
}

}  // namespace chipfire
