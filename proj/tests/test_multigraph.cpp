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

#include <catch2/catch_amalgamated.hpp>

#include "chipfire/catalog.hpp"
#include "chipfire/multigraph.hpp"
#include "oracles.hpp"

using namespace chipfire;

TEST_CASE("build stores symmetric multiplicities and valences", "[multigraph]") {
  const auto g = Multigraph::build(3, {{0, 1, 2}, {1, 2, 1}});
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.mult(0, 1) == 2);
  CHECK(g.mult(1, 0) == 2);
  CHECK(g.mult(0, 2) == 0);
  CHECK(g.valence(1) == 3);
  CHECK(g.genus() == 1);
  CHECK_FALSE(g.is_simple());
  CHECK(g.neighbors(1).size() == 2);
}

TEST_CASE("build rejects malformed input", "[multigraph]") {
  CHECK_THROWS_AS(Multigraph::build(0, {}), InvalidInput);
  CHECK_THROWS_AS(Multigraph::build(2, {{0, 0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Multigraph::build(2, {{0, 2, 1}}), InvalidInput);
  CHECK_THROWS_AS(Multigraph::build(2, {{0, 1, 0}}), InvalidInput);
  CHECK_THROWS_AS(Multigraph::build(2, {{0, 1, 1}, {1, 0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Multigraph::build(3, {{0, 1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Multigraph::from_matrix(2, {0, 1, 2, 0}), InvalidInput);
}

TEST_CASE("single vertex graph is a tree", "[multigraph]") {
  const auto g = Multigraph::build(1, {});
  CHECK(g.genus() == 0);
  CHECK(g.is_tree());
}

TEST_CASE("Cartesian product has the expected size and row-major layout", "[multigraph][product]") {
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"path:3", "cycle:4"}, {"banana:3", "complete:3"}, {"double_banana:2,1", "star:3"}}) {
    const auto g = make(a);
    const auto h = make(b);
    const auto p = cartesian_product(g, h);
    REQUIRE(p.num_vertices() == g.num_vertices() * h.num_vertices());
    CHECK(p.num_edges() == g.num_vertices() * h.num_edges() + h.num_vertices() * g.num_edges());
    const ProductIndex idx(g.num_vertices(), h.num_vertices());
    for (Vertex i = 0; i < g.num_vertices(); ++i) {
      for (Vertex j = 0; j < h.num_vertices(); ++j) {
        CHECK(idx.split(idx(i, j)) == std::pair<Vertex, Vertex>{i, j});
        for (Vertex k = 0; k < h.num_vertices(); ++k) CHECK(p.mult(idx(i, j), idx(i, k)) == h.mult(j, k));
        for (Vertex k = 0; k < g.num_vertices(); ++k) CHECK(p.mult(idx(i, j), idx(k, j)) == g.mult(i, k));
      }
    }
  }
}

TEST_CASE("product genus follows from vertex and edge counts", "[multigraph][product]") {
  const auto p = parse_graph_spec("complete:3*complete:3");
  CHECK(p.genus() == 10);
  CHECK(parse_graph_spec("double_banana:2,1*double_banana:2,1").genus() == 10);
}

TEST_CASE("isomorphism agrees with the permutation oracle", "[multigraph][isomorphism]") {
  const auto catalog = standard_catalog(5);
  for (const auto& a : catalog) {
    for (const auto& b : catalog) {
      if (a.graph.num_vertices() != b.graph.num_vertices()) continue;
      INFO(a.name << " vs " << b.name);
      CHECK(are_isomorphic(a.graph, b.graph) ==
            (oracle::canonical_matrix(a.graph) == oracle::canonical_matrix(b.graph)));
    }
  }
}

TEST_CASE("isomorphism sees through relabelling", "[multigraph][isomorphism]") {
  const auto g = Multigraph::build(4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  const auto h = Multigraph::build(4, {{2, 3, 2}, {3, 0, 1}, {0, 1, 1}, {1, 2, 1}});
  const auto k = Multigraph::build(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 2, 1}});
  CHECK(are_isomorphic(g, h));
  CHECK_FALSE(are_isomorphic(g, k));
}

TEST_CASE("distances and induced connectivity", "[multigraph]") {
  const auto g = make("path:4");
  CHECK(g.distances_from(0) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(g.induces_connected({true, true, false, false}));
  CHECK_FALSE(g.induces_connected({true, false, true, false}));
}
