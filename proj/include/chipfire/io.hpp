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

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "chipfire/brambles.hpp"
#include "chipfire/catalog.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/gonality.hpp"
#include "chipfire/multigraph.hpp"
#include "chipfire/orientations.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire::io {

using nlohmann::json;

// Graphs: {"n": 3, "edges": [[0, 1, 2], [1, 2, 1]]} with optional "labels".

inline json to_json(const Multigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.mult});
  json out = {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

inline Multigraph graph_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
      throw InvalidInput("graph JSON needs \"n\" and \"edges\"");
    }
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1) throw InvalidInput("graph JSON: n must be positive");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw InvalidInput("graph JSON: each edge is [u, v, mult]");
      const auto u = e[0].get<std::int64_t>();
      const auto v = e[1].get<std::int64_t>();
      const auto m = e[2].get<std::int64_t>();
      if (u < 0 || v < 0) throw InvalidInput("graph JSON: negative vertex index");
      if (u >= v) throw InvalidInput("graph JSON: edges must satisfy u < v");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<int>(m)});
    }
    auto g = Multigraph::build(static_cast<std::size_t>(n), edges);
    if (j.contains("labels")) g = g.with_labels(j.at("labels").get<std::vector<std::string>>());
    return g;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("graph JSON: ") + e.what());
  }
}

/// DOT with one line per edge copy.
inline std::string to_dot(const Multigraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (!g.labels().empty()) out << " [label=\"" << g.labels()[v] << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    for (int c = 0; c < e.mult; ++c) out << "  " << e.u << " -- " << e.v << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline json to_json(const Divisor& d) { return {{"chips", d.chips()}}; }

inline Divisor divisor_from_json(const json& j) {
  try {
    return Divisor(j.at("chips").get<std::vector<Chips>>());
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("divisor JSON: ") + e.what());
  }
}

/// Parses the comma-separated form "0,1,0,2".
inline Divisor parse_divisor(std::string_view text) {
  std::vector<Chips> chips;
  for (int value : FamilySpec::parse_ints(text)) chips.push_back(value);
  return Divisor(std::move(chips));
}

inline json to_json(const BurnReport& r) {
  json order = json::array();
  for (const auto& [v, edges] : r.ignition_order) order.push_back({v, edges});
  return {{"source", r.source},
          {"burned", r.burned},
          {"unburned", r.unburned},
          {"ignition_order", std::move(order)},
          {"all_burned", r.all_burned()}};
}

inline json to_json(const RankResult& r) {
  json out = {{"rank", r.rank}};
  out["obstruction"] = r.obstruction ? json(r.obstruction->chips()) : json(nullptr);
  return out;
}

/// Stable certificate fields only; elapsed time is added separately on request.
inline json to_json(const GonalityCertificate& c) {
  json out = {{"exact", c.exact},
              {"lower_bound", c.lower_bound},
              {"upper_bound", c.upper_bound},
              {"classes_examined", c.classes_examined}};
  out["gonality"] = c.exact ? json(c.gonality) : json(nullptr);
  out["witness"] = c.witness.size() ? json(c.witness.chips()) : json(nullptr);
  return out;
}

inline json to_json(const ProductReport& r) {
  json out = {{"gonality_first", r.gonality_first},
              {"gonality_second", r.gonality_second},
              {"expected", r.expected},
              {"exact", r.exact},
              {"actual_lower", r.actual_lower},
              {"actual_upper", r.actual_upper},
              {"conjecture_bound", r.conjecture_bound},
              {"gap_expected_minus_actual", r.gap_expected_minus_actual},
              {"equality_with_conjecture", r.equality_with_conjecture},
              {"certificate", to_json(r.certificate)}};
  out["actual"] = r.exact ? json(r.actual) : json(nullptr);
  return out;
}

// Orientations: [[u, v, forward, backward, unoriented], ...].

inline json to_json(const Orientation& o) {
  json out = json::array();
  for (const auto& p : o.pairs) out.push_back({p.u, p.v, p.forward, p.backward, p.unoriented});
  return out;
}

inline Orientation orientation_from_json(const json& j) {
  try {
    Orientation o;
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != 5) throw InvalidInput("orientation rows are [u, v, f, b, unoriented]");
      o.pairs.push_back({row[0].get<Vertex>(), row[1].get<Vertex>(), row[2].get<int>(), row[3].get<int>(),
                         row[4].get<int>()});
    }
    return o;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("orientation JSON: ") + e.what());
  }
}

// Bramble families: [[v, ...], ...].

inline json to_json(const BrambleFamily& f) { return f.elements; }

inline BrambleFamily bramble_from_json(const json& j) {
  try {
    return {j.get<std::vector<std::vector<Vertex>>>()};
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bramble JSON: ") + e.what());
  }
}

inline json to_json(const std::vector<CensusEntry>& census) {
  json out = json::array();
  for (const auto& entry : census) {
    json g = to_json(entry.graph);
    g["simple"] = entry.simple;
    g["name"] = entry.name;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace chipfire::io
