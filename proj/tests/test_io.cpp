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
#include "chipfire/io.hpp"

using namespace chipfire;
using nlohmann::json;

TEST_CASE("graph JSON round-trips exactly", "[io]") {
  for (const auto& [name, g] : standard_catalog(6)) {
    INFO(name);
    CHECK(io::graph_from_json(json::parse(io::to_json(g).dump())) == g);
  }
  const auto p = parse_graph_spec("double_banana:2,1*cycle:3");
  CHECK(io::graph_from_json(io::to_json(p)) == p);
}

TEST_CASE("graph JSON rejects malformed documents", "[io]") {
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"n": 2})")), InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"n": 2, "edges": [[1, 0, 1]]})")), InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 1]]})")), InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 1, 1]]})")), InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"n": "x", "edges": []})")), InvalidInput);
}

TEST_CASE("DOT output lists one line per edge copy", "[io]") {
  const auto dot = io::to_dot(make("double_banana:2,1"));
  CHECK(dot.find("graph") == 0);
  std::size_t lines = 0;
  for (std::size_t pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2)) ++lines;
  CHECK(lines == 3);
}

TEST_CASE("divisor formats", "[io]") {
  CHECK(io::parse_divisor("0,1,-2,3") == Divisor{0, 1, -2, 3});
  CHECK(io::divisor_from_json(json::parse(R"({"chips": [1, 2]})")) == Divisor{1, 2});
  CHECK(io::to_json(Divisor{3, 0}).dump() == R"({"chips":[3,0]})");
  CHECK_THROWS_AS(io::parse_divisor("1,,2"), InvalidInput);
  CHECK_THROWS_AS(io::divisor_from_json(json::parse(R"({"chip": []})")), InvalidInput);
}

TEST_CASE("orientation and bramble formats round-trip", "[io]") {
  const Orientation o{{{0, 1, 1, 0, 1}, {1, 2, 0, 1, 0}}};
  CHECK(io::orientation_from_json(io::to_json(o)) == o);
  const BrambleFamily f{{{0, 1}, {1, 2, 3}}};
  CHECK(io::bramble_from_json(io::to_json(f)).elements == f.elements);
}

TEST_CASE("JSON keys are emitted sorted", "[io]") {
  const auto text = io::to_json(make("cycle:3")).dump();
  CHECK(text.find("\"edges\"") < text.find("\"n\""));
}
