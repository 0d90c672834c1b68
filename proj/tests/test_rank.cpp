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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "chipfire/catalog.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"
#include "oracles.hpp"

using namespace chipfire;

namespace {

Divisor random_divisor(std::size_t n, std::mt19937_64& rng, Chips lo, Chips hi) {
  std::uniform_int_distribution<Chips> dist(lo, hi);
  Divisor d(n);
  for (Vertex v = 0; v < n; ++v) d[v] = dist(rng);
  return d;
}

}  // namespace

TEST_CASE("rank matches the definition on small graphs", "[rank]") {
  std::mt19937_64 rng(3);
  for (const std::string spec : {"path:3", "cycle:3", "cycle:4", "complete:4", "banana:3", "double_banana:2,1",
                                 "banana_loop:1,2,1", "tadpole:3,1"}) {
    const auto g = make(spec);
    for (int trial = 0; trial < 25; ++trial) {
      const Divisor d = random_divisor(g.num_vertices(), rng, -1, 2);
      INFO(spec << " " << d.to_string());
      const auto r = rank(g, d);
      CHECK(r.rank == oracle::rank(g, d));
      CHECK(has_positive_rank(g, d) == oracle::positive_rank(g, d));
    }
  }
}

TEST_CASE("rank obstruction has degree rank + 1 and certifies the bound", "[rank]") {
  std::mt19937_64 rng(5);
  const auto g = make("complete:4");
  for (int trial = 0; trial < 40; ++trial) {
    const Divisor d = random_divisor(4, rng, -1, 3);
    const auto r = rank(g, d);
    REQUIRE(r.obstruction.has_value());
    CHECK(r.obstruction->is_effective());
    CHECK(r.obstruction->degree() == r.rank + 1);
    CHECK_FALSE(has_effective_rep(g, d - *r.obstruction));
  }
}

TEST_CASE("rank edge cases", "[rank]") {
  const auto c4 = make("cycle:4");
  CHECK(rank(c4, Divisor{0, 0, 0, 0}).rank == 0);
  CHECK(rank(c4, Divisor{-1, 0, 0, 0}).rank == -1);
  CHECK(rank(c4, Divisor{1, 0, 1, 0}).rank == 1);
  CHECK(rank(c4, Divisor{1, 1, 0, 0}).rank == 1);
  const auto tree = make("path:4");
  CHECK(rank(tree, Divisor{3, 0, 0, 0}).rank == 3);
  CHECK(rank(make("complete:1"), Divisor{2}).rank == 2);
}

TEST_CASE("canonical divisor has rank g - 1 and degree 2g - 2", "[rank]") {
  for (const auto& [name, g] : standard_catalog(5)) {
    if (g.genus() > 6) continue;
    INFO(name);
    const Divisor k = canonical_divisor(g);
    CHECK(k.degree() == 2 * g.genus() - 2);
    CHECK(rank(g, k).rank == g.genus() - 1);
  }
}

TEST_CASE("Riemann–Roch residual vanishes on random divisors", "[rank]") {
  std::mt19937_64 rng(19);
  for (const auto& [name, g] : standard_catalog(5)) {
    if (g.genus() > 6) continue;
    for (int trial = 0; trial < 4; ++trial) {
      const Divisor d = random_divisor(g.num_vertices(), rng, -2, 3);
      INFO(name << " " << d.to_string());
      CHECK(riemann_roch_residual(g, d) == 0);
    }
  }
}

TEST_CASE("rank of a divisor with large degree is degree - g", "[rank]") {
  const auto g = make("complete:4");
  const Divisor d{3, 2, 2, 2};
  CHECK(rank(g, d).rank == d.degree() - g.genus());
}
