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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chipfire/catalog.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire {

/// Edge copies between u and v split into u→v, v→u and unoriented.
struct OrientedPair {
  Vertex u = 0;
  Vertex v = 0;
  int forward = 0;
  int backward = 0;
  int unoriented = 0;

  friend bool operator==(const OrientedPair&, const OrientedPair&) = default;
};

/// Partial orientation of a multigraph. Pairs not listed are fully unoriented.
struct Orientation {
  std::vector<OrientedPair> pairs;

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

namespace detail {

inline std::vector<std::int64_t> in_degrees(const Multigraph& g, const Orientation& o) {
  const std::size_t n = g.num_vertices();
  std::vector<std::int64_t> indeg(n, 0);
  std::vector<bool> seen(n * n, false);
  for (const auto& p : o.pairs) {
    if (p.u >= n || p.v >= n || p.u == p.v) throw InvalidInput("orientation pair has a bad vertex");
    if (p.forward < 0 || p.backward < 0 || p.unoriented < 0) {
      throw InvalidInput("orientation counts must be nonnegative");
    }
    if (p.forward + p.backward + p.unoriented != g.mult(p.u, p.v)) {
      throw InvalidInput("orientation counts for (" + std::to_string(p.u) + ", " + std::to_string(p.v) +
                         ") do not sum to the edge multiplicity");
    }
    if (seen[p.u * n + p.v]) throw InvalidInput("orientation lists a pair twice");
    seen[p.u * n + p.v] = seen[p.v * n + p.u] = true;
    indeg[p.v] += p.forward;
    indeg[p.u] += p.backward;
  }
  return indeg;
}

}  // namespace detail

/// D_O(v) = indeg(v) - 1.
inline Divisor divisor_from_orientation(const Multigraph& g, const Orientation& o) {
  const auto indeg = detail::in_degrees(g, o);
  Divisor d(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) d[v] = indeg[v] - 1;
  return d;
}

inline bool is_sourceless(const Multigraph& g, const Orientation& o) {
  const auto indeg = detail::in_degrees(g, o);
  return std::all_of(indeg.begin(), indeg.end(), [](std::int64_t k) { return k >= 1; });
}

struct OrientationSearchOptions {
  /// Largest |E| (counting parallel copies) the backtracking accepts.
  std::uint64_t max_edge_copies = 14;
};

namespace detail {

class SourcelessSearch {
 public:
  SourcelessSearch(const Multigraph& g, std::vector<Chips> target, std::int64_t oriented_target)
      : g_(g), pairs_(g.edges()), target_(std::move(target)), oriented_target_(oriented_target),
        burner_(g) {
    const std::size_t n = g.num_vertices();
    indeg_.assign(n, 0);
    last_incident_.assign(n, 0);
    remaining_.assign(pairs_.size() + 1, 0);
    for (std::size_t i = pairs_.size(); i-- > 0;) remaining_[i] = remaining_[i + 1] + pairs_[i].mult;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      last_incident_[pairs_[i].u] = i + 1;
      last_incident_[pairs_[i].v] = i + 1;
    }
    choice_.assign(pairs_.size(), {0, 0});
  }

  std::optional<Orientation> run() {
    if (!extend(0, 0)) return std::nullopt;
    Orientation o;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto [f, b] = choice_[i];
      o.pairs.push_back({pairs_[i].u, pairs_[i].v, f, b, pairs_[i].mult - f - b});
    }
    return o;
  }

 private:
  bool extend(std::size_t i, std::int64_t oriented) {
    if (oriented > oriented_target_ || oriented + remaining_[i] < oriented_target_) return false;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (indeg_[v] == 0 && last_incident_[v] <= i) return false;
    }
    if (i == pairs_.size()) return matches();
    const Edge& e = pairs_[i];
    for (int f = 0; f <= e.mult; ++f) {
      for (int b = 0; f + b <= e.mult; ++b) {
        indeg_[e.v] += f;
        indeg_[e.u] += b;
        choice_[i] = {f, b};
        const bool found = extend(i + 1, oriented + f + b);
        indeg_[e.v] -= f;
        indeg_[e.u] -= b;
        if (found) return true;
      }
    }
    return false;
  }

  bool matches() {
    std::vector<Chips> chips(indeg_.begin(), indeg_.end());
    for (auto& c : chips) c -= 1;
    burner_.reduce(chips, 0);
    return chips == target_;
  }

  const Multigraph& g_;
  std::vector<Edge> pairs_;
  std::vector<Chips> target_;
  std::int64_t oriented_target_;
  Burner burner_;
  std::vector<std::int64_t> indeg_;
  std::vector<std::size_t> last_incident_;
  std::vector<std::int64_t> remaining_;
  std::vector<std::pair<int, int>> choice_;
};

}  // namespace detail

/// Searches for a sourceless partial orientation O with D_O ~ D. Requires
/// deg(D) <= g - 1; in that range a result exists iff D has an effective
/// representative.
inline std::optional<Orientation> find_sourceless_rep(const Multigraph& g, const Divisor& d,
                                                      OrientationSearchOptions opts = {}) {
  check_divisor(g, d);
  if (d.degree() > g.genus() - 1) {
    throw InvalidInput("sourceless representatives are only characterized for deg(D) <= g - 1");
  }
  if (g.num_edges() > opts.max_edge_copies) {
    throw BudgetExceeded("orientation search limited to " + std::to_string(opts.max_edge_copies) + " edges");
  }
  // Every vertex needs an incoming copy, so deg(D_O) >= 0.
  if (d.degree() < 0) return std::nullopt;
  const auto target = q_reduce(g, d, 0).chips();
  const std::int64_t oriented = d.degree() + static_cast<std::int64_t>(g.num_vertices());
  return detail::SourcelessSearch(g, target, oriented).run();
}

/// K5□K5 with 6 chips on each of the vertices (0,0), (1,0), (2,0) and one chip
/// on (4,4); degree 19. Each 6-chip vertex has at most 6 edges to vertices
/// outside the trio, so no fire started at a chipless vertex reaches them.
inline std::pair<Multigraph, Divisor> rook_defeat_instance() {
  const Multigraph k5 = make("complete:5");
  Multigraph g = cartesian_product(k5, k5);
  const ProductIndex idx(5, 5);
  Divisor d(g.num_vertices());
  for (Vertex row = 0; row < 3; ++row) d[idx(row, 0)] = 6;
  d[idx(4, 4)] = 1;
  return {std::move(g), std::move(d)};
}

}  // namespace chipfire
