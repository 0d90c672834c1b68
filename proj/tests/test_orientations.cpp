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
#include "chipfire/orientations.hpp"
#include "chipfire/reduction.hpp"
#include "oracles.hpp"

using namespace chipfire;

TEST_CASE("cyclic orientation of a cycle gives the zero divisor", "[orientations]") {
  const auto g = make("cycle:4");
  Orientation o{{{0, 1, 1, 0, 0}, {1, 2, 1, 0, 0}, {2, 3, 1, 0, 0}, {0, 3, 0, 1, 0}}};
  CHECK(divisor_from_orientation(g, o) == Divisor{0, 0, 0, 0});
  CHECK(is_sourceless(g, o));
  Orientation partial{{{0, 1, 1, 0, 0}}};
  CHECK(divisor_from_orientation(g, partial) == Divisor{-1, 0, -1, -1});
  CHECK_FALSE(is_sourceless(g, partial));
  CHECK_THROWS_AS(divisor_from_orientation(g, Orientation{{{0, 1, 2, 0, 0}}}), InvalidInput);
  CHECK_THROWS_AS(divisor_from_orientation(g, Orientation{{{0, 2, 1, 0, 0}}}), InvalidInput);
}

TEST_CASE("sourceless search agrees with exhaustive orientation enumeration", "[orientations]") {
  for (const std::string spec : {"cycle:3", "cycle:4", "complete:4", "banana:3", "double_banana:2,2",
                                 "banana_loop:1,1,2", "tadpole:3,1"}) {
    const auto g = make(spec);
    const auto reachable = oracle::sourceless_orientation_divisors(g);
    for (Chips degree = -1; degree <= g.genus() - 1; ++degree) {
      oracle::for_each_effective(g.num_vertices(), degree + 2, [&](const Divisor& e) {
        // Shift two chips off vertex 0 to get a mix of effective and
        // non-effective classes of the target degree.
        Divisor d = e;
        d[0] -= 2;
        INFO(spec << " " << d.to_string());
        const auto o = find_sourceless_rep(g, d);
        const bool oracle_hit = std::any_of(reachable.begin(), reachable.end(),
                                            [&](const Divisor& r) { return oracle::equivalent(g, r, d); });
        CHECK(o.has_value() == oracle_hit);
        CHECK(o.has_value() == oracle::has_effective(g, d));
        if (o) {
          CHECK(is_sourceless(g, *o));
          CHECK(oracle::equivalent(g, divisor_from_orientation(g, *o), d));
        }
      });
    }
  }
}

TEST_CASE("sourceless search rejects degrees at or above the genus", "[orientations]") {
  const auto g = make("cycle:4");
  CHECK_THROWS_AS(find_sourceless_rep(g, Divisor{1, 0, 0, 0}), InvalidInput);
  CHECK_FALSE(find_sourceless_rep(g, Divisor{-1, 0, 0, 0}).has_value());
  CHECK_THROWS_AS(find_sourceless_rep(make("complete:6"), Divisor{0, 0, 0, 0, 0, 0}), BudgetExceeded);
}

TEST_CASE("rook defeat instance blocks the three heavy vertices", "[orientations]") {
  const auto [g, d] = rook_defeat_instance();
  REQUIRE(g.num_vertices() == 25);
  CHECK(d.degree() == 19);
  CHECK(d.is_effective());
  std::vector<Vertex> heavy;
  for (Vertex v = 0; v < 25; ++v) {
    if (d[v] == 6) heavy.push_back(v);
  }
  REQUIRE(heavy.size() == 3);
  for (Vertex v = 0; v < 25; ++v) {
    if (d[v] != 0) continue;
    const auto report = dhar_burn(g, d, v);
    for (Vertex h : heavy) {
      CHECK(std::find(report.unburned.begin(), report.unburned.end(), h) != report.unburned.end());
    }
  }
}
