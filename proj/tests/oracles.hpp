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

// Brute-force reference implementations used as test oracles. None of
// these call into Dhar burning, q-reduction or the rank solver; they work
// from the definitions with exact rational linear algebra and exhaustive
// enumeration, so they only scale to tiny graphs.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/multigraph.hpp"

namespace oracle {

using chipfire::Chips;
using chipfire::Divisor;
using chipfire::Multigraph;
using chipfire::Vertex;

__extension__ using Wide = __int128;

/// Exact rational with a positive denominator, always in lowest terms.
struct Fraction {
  Wide num = 0;
  Wide den = 1;

  Fraction() = default;
  Fraction(Wide n, Wide d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Wide a = num < 0 ? -num : num;
    Wide b = den;
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  friend Fraction operator-(Fraction a, Fraction b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Fraction operator*(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }
  friend Fraction operator/(Fraction a, Fraction b) {
    if (b.num == 0) throw std::domain_error("division by zero");
    return {a.num * b.den, a.den * b.num};
  }
};

/// Laplacian with row and column 0 deleted, as rationals.
inline std::vector<std::vector<Fraction>> reduced_laplacian(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Fraction>> m(n - 1, std::vector<Fraction>(n - 1));
  for (Vertex i = 1; i < n; ++i) {
    for (Vertex j = 1; j < n; ++j) m[i - 1][j - 1] = i == j ? Fraction(g.valence(i)) : Fraction(-g.mult(i, j));
  }
  return m;
}

/// Determinant by Gaussian elimination over the rationals.
inline Fraction determinant(std::vector<std::vector<Fraction>> m) {
  const std::size_t n = m.size();
  Fraction det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Fraction(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = Fraction(0) - det;
    }
    det = det * m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Fraction f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  return det;
}

/// Number of spanning trees (Kirchhoff); equals the number of divisor
/// classes of any fixed degree.
inline std::int64_t spanning_trees(const Multigraph& g) {
  if (g.num_vertices() == 1) return 1;
  const Fraction d = determinant(reduced_laplacian(g));
  return static_cast<std::int64_t>(d.num);
}

/// D ~ D' iff deg D = deg D' and the reduced Laplacian system L̃x = (D - D')
/// restricted to vertices 1..n-1 has an integral solution.
inline bool equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) {
  if (a.degree() != b.degree()) return false;
  const std::size_t n = g.num_vertices();
  if (n == 1) return true;
  auto m = reduced_laplacian(g);
  std::vector<Fraction> rhs(n - 1);
  for (Vertex v = 1; v < n; ++v) rhs[v - 1] = Fraction(a[v] - b[v]);
  const std::size_t k = n - 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (m[p][c].is_zero()) ++p;
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Fraction f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < k; ++j) m[r][j] = m[r][j] - f * m[c][j];
      rhs[r] = rhs[r] - f * rhs[c];
    }
  }
  for (std::size_t r = 0; r < k; ++r) {
    if (!(rhs[r] / m[r][r]).is_integer()) return false;
  }
  return true;
}

/// Calls `fn` on every effective divisor of the given degree.
inline void for_each_effective(std::size_t n, Chips degree, const std::function<void(const Divisor&)>& fn) {
  if (degree < 0) return;
  std::vector<Chips> chips(n, 0);
  std::function<void(std::size_t, Chips)> rec = [&](std::size_t v, Chips left) {
    if (v + 1 == n) {
      chips[v] = left;
      fn(Divisor(chips));
      return;
    }
    for (Chips c = 0; c <= left; ++c) {
      chips[v] = c;
      rec(v + 1, left - c);
    }
  };
  rec(0, degree);
}

/// Searches every effective divisor of matching degree for an equivalent one.
inline bool has_effective(const Multigraph& g, const Divisor& d) {
  if (d.degree() < 0) return false;
  if (d.is_effective()) return true;
  bool found = false;
  for_each_effective(g.num_vertices(), d.degree(), [&](const Divisor& e) {
    if (!found && equivalent(g, d, e)) found = true;
  });
  return found;
}

/// Baker–Norine rank straight from the definition.
inline Chips rank(const Multigraph& g, const Divisor& d) {
  if (!has_effective(g, d)) return -1;
  for (Chips k = 1;; ++k) {
    bool all = true;
    for_each_effective(g.num_vertices(), k, [&](const Divisor& e) {
      if (all && !has_effective(g, d - e)) all = false;
    });
    if (!all) return k - 1;
  }
}

inline bool positive_rank(const Multigraph& g, const Divisor& d) {
  if (!has_effective(g, d)) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!has_effective(g, d - Divisor::point(g.num_vertices(), v))) return false;
  }
  return true;
}

/// Smallest degree of an effective divisor with positive rank.
inline int gonality(const Multigraph& g) {
  for (int k = 1;; ++k) {
    bool found = false;
    for_each_effective(g.num_vertices(), k, [&](const Divisor& e) {
      if (!found && positive_rank(g, e)) found = true;
    });
    if (found) return k;
  }
}

/// q-reduced by definition: effective away from q and no nonempty subset of
/// V \ {q} can fire without some vertex going into debt.
inline bool is_reduced(const Multigraph& g, const Divisor& d, Vertex q) {
  const std::size_t n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    if (v != q && d[v] < 0) return false;
  }
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (mask & (1u << q)) continue;
    bool legal = true;
    for (Vertex v = 0; v < n && legal; ++v) {
      if (!(mask & (1u << v))) continue;
      Chips out = 0;
      for (Vertex u = 0; u < n; ++u) {
        if (!(mask & (1u << u))) out += g.mult(v, u);
      }
      legal = d[v] >= out;
    }
    if (legal) return false;
  }
  return true;
}

/// Every partial orientation's divisor, written as in-degree minus one.
inline std::vector<Divisor> sourceless_orientation_divisors(const Multigraph& g) {
  const auto edges = g.edges();
  const std::size_t n = g.num_vertices();
  std::vector<Divisor> out;
  std::vector<int> in_count(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == edges.size()) {
      for (Vertex v = 0; v < n; ++v) {
        if (in_count[v] == 0) return;
      }
      Divisor d(n);
      for (Vertex v = 0; v < n; ++v) d[v] = in_count[v] - 1;
      out.push_back(d);
      return;
    }
    const auto& e = edges[i];
    for (int f = 0; f <= e.mult; ++f) {
      for (int b = 0; f + b <= e.mult; ++b) {
        in_count[e.v] += f;
        in_count[e.u] += b;
        rec(i + 1);
        in_count[e.v] -= f;
        in_count[e.u] -= b;
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Size of a smallest vertex set meeting every element of the family.
inline int min_hitting_set(std::size_t n, const std::vector<std::vector<Vertex>>& family) {
  int best = static_cast<int>(n) + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool hits = std::all_of(family.begin(), family.end(), [&](const auto& el) {
      return std::any_of(el.begin(), el.end(), [&](Vertex v) { return (mask >> v) & 1u; });
    });
    if (hits) best = std::min(best, std::popcount(mask));
  }
  return best;
}

/// Canonical form under all vertex permutations: lexicographically least
/// permuted multiplicity matrix.
inline std::vector<int> canonical_matrix(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> m(n * n);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) m[i * n + j] = g.mult(perm[i], perm[j]);
    }
    if (best.empty() || m < best) best = std::move(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Isomorphism classes of connected genus-1 multigraphs on n vertices, found
/// by trying every multiplicity matrix with entries in {0, 1, 2}.
inline std::pair<int, int> genus1_counts(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::set<std::vector<int>> simple;
  std::set<std::vector<int>> multi;
  std::vector<int> mult(pairs.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int edges) {
    if (edges > static_cast<int>(n)) return;
    if (i == pairs.size()) {
      if (edges != static_cast<int>(n)) return;
      std::vector<chipfire::Edge> list;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mult[k] > 0) list.push_back({pairs[k].first, pairs[k].second, mult[k]});
      }
      try {
        const auto g = Multigraph::build(n, list);
        (g.is_simple() ? simple : multi).insert(canonical_matrix(g));
      } catch (const chipfire::InvalidInput&) {
        // disconnected
      }
      return;
    }
    for (int m = 0; m <= 2; ++m) {
      mult[i] = m;
      rec(i + 1, edges + m);
    }
    mult[i] = 0;
  };
  rec(0, 0);
  return {static_cast<int>(simple.size()), static_cast<int>(multi.size())};
}

}  // namespace oracle
