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
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chipfire/multigraph.hpp"

namespace chipfire {

enum class Family {
  path,
  cycle,
  complete,
  banana,
  double_banana,
  banana_loop,
  tadpole,
  bull,
  cricket,
  chain,
  k4_tail,
  star,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 12> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::banana, "banana"},
    {Family::double_banana, "double_banana"},
    {Family::banana_loop, "banana_loop"},
    {Family::tadpole, "tadpole"},
    {Family::bull, "bull"},
    {Family::cricket, "cricket"},
    {Family::chain, "chain"},
    {Family::k4_tail, "k4_tail"},
    {Family::star, "star"},
}};

/// A family tag plus its integer parameters, e.g. `tadpole:3,2`.
struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;

  std::string to_string() const {
    std::string out;
    for (const auto& [f, name] : kFamilyNames) {
      if (f == family) out = name;
    }
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : ":") + std::to_string(params[i]);
    return out;
  }

  /// Parses `name` or `name:p1,p2,...`.
  static FamilySpec parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    FamilySpec spec;
    bool found = false;
    for (const auto& [f, fname] : kFamilyNames) {
      if (fname == name) {
        spec.family = f;
        found = true;
      }
    }
    if (!found) throw InvalidInput("unknown graph family '" + std::string(name) + "'");
    if (colon != std::string_view::npos) spec.params = parse_ints(text.substr(colon + 1));
    return spec;
  }

  static std::vector<int> parse_ints(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = std::min(text.find(',', pos), text.size());
      const std::string token(text.substr(pos, comma - pos));
      if (token.empty()) throw InvalidInput("empty parameter in '" + std::string(text) + "'");
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw InvalidInput("bad integer '" + token + "'");
      }
      if (used != token.size()) throw InvalidInput("bad integer '" + token + "'");
      out.push_back(value);
      pos = comma + 1;
    }
    return out;
  }
};

namespace detail {

inline void expect_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    throw InvalidInput(spec.to_string() + ": expected " + std::to_string(count) + " parameter(s)");
  }
}

inline void expect(bool ok, const FamilySpec& spec, std::string_view why) {
  if (!ok) throw InvalidInput(spec.to_string() + ": " + std::string(why));
}

inline Multigraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return Multigraph::build(n, edges);
}

}  // namespace detail

/// Builds a family member with its canonical vertex numbering:
///  - path, cycle: vertices in order around the path or cycle;
///  - complete: 0..n-1;
///  - banana: two vertices; double_banana m,n: 0-1 has m copies, 1-2 has n;
///  - banana_loop l,m,n: 0-1 has l, 1-2 has m, 0-2 has n;
///  - tadpole c,t: cycle 0..c-1, then a path c..c+t-1 hanging off vertex 0;
///  - bull: triangle 0,1,2 with leaves 3 on 0 and 4 on 1;
///  - cricket: triangle 0,1,2 with leaves 3 and 4 both on 0;
///  - chain n: v_1..v_{n+1} as 0..n, n copies between consecutive vertices
///    except a single edge between the last two;
///  - k4_tail: K4 on 0..3, then the path 4..7 attached at vertex 3;
///  - star k: center 0 with leaves 1..k-1.
inline Multigraph make(const FamilySpec& spec) {
  using detail::expect;
  using detail::expect_params;
  const auto& p = spec.params;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::path:
      expect_params(spec, 1);
      expect(p[0] >= 1, spec, "path needs n >= 1");
      return detail::path_graph(p[0]);
    case Family::cycle:
      expect_params(spec, 1);
      expect(p[0] >= 3, spec, "cycle needs n >= 3 (use banana:2 for the 2-cycle)");
      for (int i = 0; i < p[0]; ++i) edges.push_back({Vertex(i), Vertex((i + 1) % p[0]), 1});
      return Multigraph::build(p[0], edges);
    case Family::complete:
      expect_params(spec, 1);
      expect(p[0] >= 1, spec, "complete graph needs n >= 1");
      for (int i = 0; i < p[0]; ++i) {
        for (int j = i + 1; j < p[0]; ++j) edges.push_back({Vertex(i), Vertex(j), 1});
      }
      return Multigraph::build(p[0], edges);
    case Family::banana:
      expect_params(spec, 1);
      expect(p[0] >= 2, spec, "banana needs n >= 2");
      return Multigraph::build(2, {{0, 1, p[0]}});
    case Family::double_banana:
      expect_params(spec, 2);
      expect(p[0] >= 1 && p[1] >= 1 && std::max(p[0], p[1]) >= 2, spec,
             "double banana needs m, n >= 1 and max(m, n) >= 2");
      return Multigraph::build(3, {{0, 1, p[0]}, {1, 2, p[1]}});
    case Family::banana_loop:
      expect_params(spec, 3);
      expect(p[0] >= 1 && p[1] >= 1 && p[2] >= 1 && std::max({p[0], p[1], p[2]}) >= 2, spec,
             "banana loop needs l, m, n >= 1 and max(l, m, n) >= 2");
      return Multigraph::build(3, {{0, 1, p[0]}, {1, 2, p[1]}, {0, 2, p[2]}});
    case Family::tadpole: {
      expect_params(spec, 2);
      expect(p[0] >= 3 && p[1] >= 1, spec, "tadpole needs c >= 3 and t >= 1");
      const int c = p[0];
      const int t = p[1];
      for (int i = 0; i < c; ++i) edges.push_back({Vertex(i), Vertex((i + 1) % c), 1});
      edges.push_back({0, Vertex(c), 1});
      for (int i = c; i + 1 < c + t; ++i) edges.push_back({Vertex(i), Vertex(i + 1), 1});
      return Multigraph::build(c + t, edges);
    }
    case Family::bull:
      expect_params(spec, 0);
      return Multigraph::build(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {1, 4, 1}});
    case Family::cricket:
      expect_params(spec, 0);
      return Multigraph::build(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
    case Family::chain: {
      expect_params(spec, 1);
      expect(p[0] >= 2, spec, "chain needs n >= 2");
      const int n = p[0];
      for (int i = 0; i + 1 < n; ++i) edges.push_back({Vertex(i), Vertex(i + 1), n});
      edges.push_back({Vertex(n - 1), Vertex(n), 1});
      return Multigraph::build(n + 1, edges);
    }
    case Family::k4_tail:
      expect_params(spec, 0);
      for (Vertex i = 0; i < 4; ++i) {
        for (Vertex j = i + 1; j < 4; ++j) edges.push_back({i, j, 1});
      }
      for (Vertex i = 3; i < 7; ++i) edges.push_back({i, i + 1, 1});
      return Multigraph::build(8, edges);
    case Family::star:
      expect_params(spec, 1);
      expect(p[0] >= 1, spec, "star needs k >= 1");
      for (int i = 1; i < p[0]; ++i) edges.push_back({0, Vertex(i), 1});
      return Multigraph::build(p[0], edges);
  }
  throw InvalidInput("unhandled family");
}

inline Multigraph make(std::string_view spec) { return make(FamilySpec::parse(spec)); }

/// Graph mini-language: a family spec, `rook:m,n` (K_m□K_n), `grid:m,n`
/// (P_m□P_n), or a product `A*B` of any of these (left-associative).
inline Multigraph parse_graph_spec(std::string_view text) {
  if (const auto star = text.rfind('*'); star != std::string_view::npos) {
    return cartesian_product(parse_graph_spec(text.substr(0, star)), parse_graph_spec(text.substr(star + 1)));
  }
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  if (name == "rook" || name == "grid") {
    if (colon == std::string_view::npos) throw InvalidInput(std::string(name) + " needs two parameters m,n");
    const auto p = FamilySpec::parse_ints(text.substr(colon + 1));
    if (p.size() != 2 || p[0] < 1 || p[1] < 1) throw InvalidInput(std::string(name) + " needs m,n >= 1");
    const char* f = name == "rook" ? "complete:" : "path:";
    return cartesian_product(make(f + std::to_string(p[0])), make(f + std::to_string(p[1])));
  }
  return make(FamilySpec::parse(text));
}

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

/// One member of the genus-1 census.
struct CensusEntry {
  std::string name;
  Multigraph graph;
  bool simple = false;
};

namespace detail {

/// Attaches `extra` vertices one at a time, each by a single edge to any
/// earlier vertex; every tree attachment to the base graph arises this way.
inline void grow_trees(const Multigraph& base, std::size_t extra, std::vector<Multigraph>& out) {
  if (extra == 0) {
    out.push_back(base);
    return;
  }
  const std::size_t n = base.num_vertices();
  for (Vertex parent = 0; parent < n; ++parent) {
    auto edges = base.edges();
    edges.push_back({parent, n, 1});
    grow_trees(Multigraph::build(n + 1, edges), extra - 1, out);
  }
}

inline std::string census_name(const Multigraph& g) {
  std::vector<std::string> candidates;
  const std::size_t n = g.num_vertices();
  candidates.push_back("cycle:" + std::to_string(n));
  for (std::size_t c = 3; c < n; ++c) candidates.push_back("tadpole:" + std::to_string(c) + "," + std::to_string(n - c));
  candidates.insert(candidates.end(), {"bull", "cricket", "banana:2", "double_banana:2,1"});
  for (const auto& name : candidates) {
    try {
      if (are_isomorphic(g, make(name))) return name;
    } catch (const InvalidInput&) {
    }
  }
  return {};
}

}  // namespace detail

/// Largest vertex count the census enumerates.
inline constexpr std::size_t kCensusVertexLimit = 6;

/// Every connected genus-1 multigraph with vmin..vmax vertices, one per
/// isomorphism class: a cycle of length c >= 2 (c = 2 is a doubled edge)
/// with trees hanging off it. Sorted by vertex count, then cycle length
/// descending, then generation order.
inline std::vector<CensusEntry> genus1_census(std::size_t vmin, std::size_t vmax) {
  if (vmin < 2 || vmin > vmax) throw InvalidInput("census needs 2 <= vmin <= vmax");
  if (vmax > kCensusVertexLimit) {
    throw BudgetExceeded("census limited to " + std::to_string(kCensusVertexLimit) + " vertices");
  }
  std::vector<CensusEntry> out;
  for (std::size_t n = vmin; n <= vmax; ++n) {
    std::size_t unnamed = 0;
    for (std::size_t c = n; c >= 2; --c) {
      std::vector<Edge> cycle;
      if (c == 2) {
        cycle.push_back({0, 1, 2});
      } else {
        for (Vertex i = 0; i < c; ++i) cycle.push_back({i, (i + 1) % c, 1});
      }
      std::vector<Multigraph> grown;
      detail::grow_trees(Multigraph::build(c, cycle), n - c, grown);
      for (auto& g : grown) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const CensusEntry& e) {
          return e.graph.num_vertices() == n && are_isomorphic(e.graph, g);
        });
        if (seen) continue;
        std::string name = detail::census_name(g);
        if (name.empty()) name = "genus1:v" + std::to_string(n) + "#" + std::to_string(unnamed++);
        out.push_back({std::move(name), std::move(g), c >= 3});
      }
    }
  }
  return out;
}

/// Family members with at most `max_vertices` vertices, over bounded
/// parameter ranges (bananas up to 6 edges, loop and double-banana
/// multiplicities up to 3, chains up to n = 5).
inline std::vector<NamedGraph> standard_catalog(std::size_t max_vertices) {
  std::vector<NamedGraph> out;
  auto add = [&](const std::string& spec) {
    Multigraph g = make(spec);
    if (g.num_vertices() <= max_vertices) out.push_back({spec, std::move(g)});
  };
  const int nmax = static_cast<int>(max_vertices);
  for (int n = 1; n <= nmax; ++n) add("path:" + std::to_string(n));
  for (int n = 3; n <= nmax; ++n) add("cycle:" + std::to_string(n));
  for (int n = 1; n <= nmax; ++n) add("complete:" + std::to_string(n));
  for (int k = 2; k <= nmax; ++k) add("star:" + std::to_string(k));
  for (int n = 2; n <= 6; ++n) add("banana:" + std::to_string(n));
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      if (std::max(m, n) >= 2) add("double_banana:" + std::to_string(m) + "," + std::to_string(n));
    }
  }
  for (int l = 1; l <= 3; ++l) {
    for (int m = l; m <= 3; ++m) {
      for (int n = m; n <= 3; ++n) {
        if (n >= 2) add("banana_loop:" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n));
      }
    }
  }
  for (int c = 3; c <= nmax; ++c) {
    for (int t = 1; c + t <= nmax; ++t) add("tadpole:" + std::to_string(c) + "," + std::to_string(t));
  }
  add("bull");
  add("cricket");
  for (int n = 2; n <= 5; ++n) add("chain:" + std::to_string(n));
  add("k4_tail");
  return out;
}

}  // namespace chipfire
