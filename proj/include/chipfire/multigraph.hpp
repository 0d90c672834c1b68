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
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chipfire/errors.hpp"

namespace chipfire {

using Vertex = std::size_t;

/// One entry of an edge list: `mult` parallel copies of the edge {u, v}.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  int mult = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Row-major naming of the vertices of a product G□H.
///
/// Vertex (i, j) with i in G and j in H lives at index i * k + j, where k is
/// the vertex count of H. This layout is fixed so that divisors on products
/// serialize identically across runs.
class ProductIndex {
 public:
  ProductIndex(std::size_t m, std::size_t k) : m_(m), k_(k) {}

  std::size_t first_size() const { return m_; }
  std::size_t second_size() const { return k_; }
  std::size_t size() const { return m_ * k_; }

  Vertex operator()(Vertex i, Vertex j) const { return i * k_ + j; }
  std::pair<Vertex, Vertex> split(Vertex v) const { return {v / k_, v % k_}; }

 private:
  std::size_t m_;
  std::size_t k_;
};

/// Connected loopless multigraph stored as a dense symmetric multiplicity
/// matrix, with adjacency lists cached for the burning loops.
///
/// Immutable after construction. Every constructor validates symmetry,
/// absence of loops, and connectivity, so downstream code may assume them.
class Multigraph {
 public:
  struct Neighbor {
    Vertex vertex;
    int mult;
  };

  Multigraph() = default;

  /// Builds from an edge list. Pairs may be given in either orientation but
  /// each unordered pair at most once.
  static Multigraph build(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) throw InvalidInput("graph must have at least one vertex");
    std::vector<int> mult(n * n, 0);
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw InvalidInput("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                           ") has a vertex out of range for n = " + std::to_string(n));
      }
      if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
      if (e.mult < 1) throw InvalidInput("edge multiplicity must be at least 1");
      if (mult[e.u * n + e.v] != 0) {
        throw InvalidInput("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                           ") listed twice");
      }
      mult[e.u * n + e.v] = e.mult;
      mult[e.v * n + e.u] = e.mult;
    }
    return Multigraph(n, std::move(mult));
  }

  static Multigraph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from a full n×n multiplicity matrix in row-major order.
  static Multigraph from_matrix(std::size_t n, std::vector<int> mult) {
    if (n == 0) throw InvalidInput("graph must have at least one vertex");
    if (mult.size() != n * n) throw InvalidInput("multiplicity matrix has the wrong size");
    for (std::size_t u = 0; u < n; ++u) {
      if (mult[u * n + u] != 0) throw InvalidInput("self-loop at vertex " + std::to_string(u));
      for (std::size_t v = 0; v < n; ++v) {
        if (mult[u * n + v] < 0) throw InvalidInput("negative multiplicity");
        if (mult[u * n + v] != mult[v * n + u]) throw InvalidInput("multiplicity matrix is not symmetric");
      }
    }
    return Multigraph(n, std::move(mult));
  }

  std::size_t num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return num_edges_; }
  int mult(Vertex u, Vertex v) const { return mult_[u * n_ + v]; }
  std::int64_t valence(Vertex v) const { return valence_[v]; }
  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_[v]; }
  const std::vector<int>& matrix() const { return mult_; }

  /// Cycle rank |E| - |V| + 1.
  std::int64_t genus() const {
    return static_cast<std::int64_t>(num_edges_) - static_cast<std::int64_t>(n_) + 1;
  }

  bool is_simple() const {
    return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m <= 1; });
  }

  bool is_tree() const { return genus() == 0; }

  /// Edge list with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (int m = mult(u, v); m > 0) out.push_back({u, v, m});
      }
    }
    return out;
  }

  /// BFS distances from `source`.
  std::vector<std::size_t> distances_from(Vertex source) const {
    std::vector<std::size_t> dist(n_, n_);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (const Neighbor& nb : adjacency_[u]) {
        if (dist[nb.vertex] == n_) {
          dist[nb.vertex] = dist[u] + 1;
          queue.push_back(nb.vertex);
        }
      }
    }
    return dist;
  }

  /// True when the vertex subset (given as a mask) induces a connected subgraph.
  bool induces_connected(const std::vector<bool>& mask) const {
    auto first = std::find(mask.begin(), mask.end(), true);
    if (first == mask.end()) return false;
    std::vector<bool> seen(n_, false);
    std::vector<Vertex> stack{static_cast<Vertex>(first - mask.begin())};
    seen[stack.back()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : adjacency_[u]) {
        if (mask[nb.vertex] && !seen[nb.vertex]) {
          seen[nb.vertex] = true;
          ++reached;
          stack.push_back(nb.vertex);
        }
      }
    }
    return reached == static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
  }

  const std::vector<std::string>& labels() const { return labels_; }

  Multigraph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != n_) throw InvalidInput("label count does not match vertex count");
    Multigraph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
  }

  /// Multiplicity-matrix equality; labels are ignored.
  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.mult_ == b.mult_;
  }

 private:
  Multigraph(std::size_t n, std::vector<int> mult) : n_(n), mult_(std::move(mult)) {
    adjacency_.assign(n_, {});
    valence_.assign(n_, 0);
    std::uint64_t twice_edges = 0;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (int m = mult_[u * n_ + v]; m > 0) {
          adjacency_[u].push_back({v, m});
          valence_[u] += m;
          twice_edges += static_cast<std::uint64_t>(m);
        }
      }
    }
    num_edges_ = twice_edges / 2;
    auto dist = distances_from(0);
    if (std::any_of(dist.begin(), dist.end(), [&](std::size_t d) { return d == n_; })) {
      throw InvalidInput("graph is disconnected");
    }
  }

  std::size_t n_ = 0;
  std::vector<int> mult_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::int64_t> valence_;
  std::uint64_t num_edges_ = 0;
  std::vector<std::string> labels_;
};

/// G□H with row-major vertex naming (see ProductIndex).
inline Multigraph cartesian_product(const Multigraph& g, const Multigraph& h) {
  const std::size_t m = g.num_vertices();
  const std::size_t k = h.num_vertices();
  const ProductIndex idx(m, k);
  const std::size_t n = m * k;
  std::vector<int> mult(n * n, 0);
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < k; ++j) {
      for (Vertex j2 = 0; j2 < k; ++j2) mult[idx(i, j) * n + idx(i, j2)] = h.mult(j, j2);
      for (Vertex i2 = 0; i2 < m; ++i2) mult[idx(i, j) * n + idx(i2, j)] = g.mult(i, i2);
    }
  }
  auto product = Multigraph::from_matrix(n, std::move(mult));
  if (!g.labels().empty() && !h.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (Vertex i = 0; i < m; ++i) {
      for (Vertex j = 0; j < k; ++j) labels.push_back("(" + g.labels()[i] + "," + h.labels()[j] + ")");
    }
    product = product.with_labels(std::move(labels));
  }
  return product;
}

inline std::int64_t genus(const Multigraph& g) { return g.genus(); }

namespace detail {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Multigraph& g, const Multigraph& h) : g_(g), h_(h) {
    const std::size_t n = g.num_vertices();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    // Place high-valence vertices first, then keep each next vertex adjacent to
    // an already-placed one where possible so multiplicity checks bite early.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.valence(a) > g.valence(b); });
    std::vector<Vertex> connected_order;
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = n;
      std::int64_t best_links = -1;
      for (Vertex v : order_) {
        if (placed[v]) continue;
        std::int64_t links = 0;
        for (Vertex u : connected_order) links += g.mult(u, v);
        if (links > best_links) {
          best_links = links;
          best = v;
        }
      }
      placed[best] = true;
      connected_order.push_back(best);
    }
    order_ = std::move(connected_order);
    image_.assign(n, n);
    used_.assign(n, false);
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    const std::size_t n = g_.num_vertices();
    if (depth == n) return true;
    Vertex v = order_[depth];
    for (Vertex w = 0; w < n; ++w) {
      if (used_[w] || h_.valence(w) != g_.valence(v)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        Vertex u = order_[d];
        ok = g_.mult(u, v) == h_.mult(image_[u], w);
      }
      if (!ok) continue;
      image_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const Multigraph& g_;
  const Multigraph& h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Largest vertex count accepted by are_isomorphic.
inline constexpr std::size_t kIsomorphismVertexLimit = 12;

/// Multiplicity-preserving isomorphism test by permutation backtracking.
/// Meant for census-sized graphs; throws BudgetExceeded beyond the limit.
inline bool are_isomorphic(const Multigraph& g, const Multigraph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  if (g.num_vertices() > kIsomorphismVertexLimit) {
    throw BudgetExceeded("isomorphism test limited to " + std::to_string(kIsomorphismVertexLimit) +
                         " vertices");
  }
  auto valences = [](const Multigraph& x) {
    std::vector<std::int64_t> out;
    for (Vertex v = 0; v < x.num_vertices(); ++v) out.push_back(x.valence(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (valences(g) != valences(h)) return false;
  auto mults = [](const Multigraph& x) {
    std::vector<int> out;
    for (const Edge& e : x.edges()) out.push_back(e.mult);
    std::sort(out.begin(), out.end());
    return out;
  };
  if (mults(g) != mults(h)) return false;
  return detail::IsomorphismSearch(g, h).run();
}

}  // namespace chipfire
