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

// Command-line front end for the chipfire library.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 budget exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chipfire/brambles.hpp"
#include "chipfire/catalog.hpp"
#include "chipfire/gonality.hpp"
#include "chipfire/io.hpp"
#include "chipfire/orientations.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"
#include "chipfire/verify.hpp"

namespace {

using chipfire::Divisor;
using chipfire::Multigraph;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInvalidInput = 2;
constexpr int kBudgetExceeded = 3;

struct Settings {
  std::string graph;
  std::string other;
  std::string divisor;
  std::string bramble;
  std::string census;
  std::string output;
  std::string format = "text";
  std::string suite;
  std::size_t base = 0;
  std::optional<int> degree_cap;
  std::optional<double> time_budget_s;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  bool dot = false;
  bool slow = false;
  bool report = false;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw chipfire::InvalidInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw chipfire::InvalidInput(what + ": " + e.what());
  }
}

/// A graph argument is a JSON file when such a file exists, otherwise a
/// family spec such as "cycle:5" or "rook:3,3" or "path:3*cycle:4".
Multigraph load_graph(const std::string& arg) {
  if (arg.empty()) throw chipfire::InvalidInput("--graph is required");
  if (std::filesystem::is_regular_file(arg)) return chipfire::io::graph_from_json(parse_json(read_file(arg), arg));
  return chipfire::parse_graph_spec(arg);
}

Divisor load_divisor(const std::string& arg, const Multigraph& g) {
  if (arg.empty()) throw chipfire::InvalidInput("--divisor is required");
  Divisor d = std::filesystem::is_regular_file(arg)
                  ? chipfire::io::divisor_from_json(parse_json(read_file(arg), arg))
                  : chipfire::io::parse_divisor(arg);
  chipfire::check_divisor(g, d);
  return d;
}

chipfire::GonalityOptions gonality_options(const Settings& s) {
  chipfire::GonalityOptions o;
  o.degree_cap = s.degree_cap;
  o.threads = s.threads;
  if (s.time_budget_s) o.time_budget = std::chrono::duration<double>(*s.time_budget_s);
  return o;
}

std::string chips_text(const std::vector<chipfire::Chips>& chips) {
  std::string out;
  for (std::size_t i = 0; i < chips.size(); ++i) out += (i ? "," : "") + std::to_string(chips[i]);
  return out;
}

class Output {
 public:
  explicit Output(const Settings& s) : settings_(s) {}

  bool json_format() const { return settings_.format == "json"; }

  /// Emits `j` in JSON mode and `text` otherwise.
  void emit(const json& j, const std::string& text) const { write(json_format() ? j.dump(2) + "\n" : text); }

  void write(const std::string& text) const {
    if (settings_.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(settings_.output);
    if (!out) throw chipfire::InvalidInput("cannot write '" + settings_.output + "'");
    out << text;
  }

 private:
  const Settings& settings_;
};

int run_graph(const Settings& s, const Output& out) {
  if (!s.census.empty()) {
    const auto range = chipfire::FamilySpec::parse_ints(s.census);
    if (range.size() != 2 || range[0] < 0 || range[1] < 0) {
      throw chipfire::InvalidInput("--census takes VMIN,VMAX");
    }
    const auto census = chipfire::genus1_census(range[0], range[1]);
    std::string text;
    for (const auto& e : census) {
      text += e.name + "  " + (e.simple ? "simple" : "non-simple") + "  " + chipfire::io::to_json(e.graph).dump() + "\n";
    }
    out.emit(chipfire::io::to_json(census), text);
    return kOk;
  }
  const Multigraph g = load_graph(s.graph);
  if (s.dot) {
    out.write(chipfire::io::to_dot(g));
    return kOk;
  }
  std::ostringstream text;
  text << "vertices " << g.num_vertices() << ", edges " << g.num_edges() << ", genus " << g.genus()
       << (g.is_simple() ? ", simple" : ", multigraph") << "\n";
  for (const auto& e : g.edges()) text << e.u << " -- " << e.v << " x" << e.mult << "\n";
  out.emit(chipfire::io::to_json(g), text.str());
  return kOk;
}

int run_product(const Settings& s, const Output& out) {
  const Multigraph a = load_graph(s.graph);
  const Multigraph b = load_graph(s.other);
  if (!s.report) {
    const Multigraph p = chipfire::cartesian_product(a, b);
    std::ostringstream text;
    text << "vertices " << p.num_vertices() << ", edges " << p.num_edges() << ", genus " << p.genus() << "\n";
    out.emit(chipfire::io::to_json(p), text.str());
    return kOk;
  }
  chipfire::ProductOptions opts;
  opts.factor_options.threads = s.threads;
  opts.product_options = gonality_options(s);
  const auto r = chipfire::product_report(a, b, opts);
  std::ostringstream text;
  text << "gon(G) " << r.gonality_first << ", gon(H) " << r.gonality_second << ", expected " << r.expected << "\n";
  if (r.exact) {
    text << "gon(G□H) " << r.actual << "\n";
  } else {
    text << "gon(G□H) in [" << r.actual_lower << ", " << r.actual_upper << "]\n";
  }
  text << "floor((g+3)/2) " << r.conjecture_bound << ", gap " << r.gap_expected_minus_actual << "\n";
  out.emit(chipfire::io::to_json(r), text.str());
  return r.exact ? kOk : kBudgetExceeded;
}

int run_reduce(const Settings& s, const Output& out) {
  const Multigraph g = load_graph(s.graph);
  const Divisor d = load_divisor(s.divisor, g);
  const Divisor r = chipfire::q_reduce(g, d, s.base);
  out.emit(chipfire::io::to_json(r), chips_text(r.chips()) + "\n");
  return kOk;
}

int run_burn(const Settings& s, const Output& out) {
  const Multigraph g = load_graph(s.graph);
  const Divisor d = load_divisor(s.divisor, g);
  const auto r = chipfire::dhar_burn(g, d, s.base);
  std::ostringstream text;
  text << (r.all_burned() ? "all burned" : "stopped") << " from " << r.source << "\n";
  for (const auto& [v, edges] : r.ignition_order) text << "ignite " << v << " (" << edges << " burning edges)\n";
  if (!r.unburned.empty()) {
    text << "unburned";
    for (auto v : r.unburned) text << " " << v;
    text << "\n";
  }
  out.emit(chipfire::io::to_json(r), text.str());
  return kOk;
}

int run_rank(const Settings& s, const Output& out) {
  const Multigraph g = load_graph(s.graph);
  const Divisor d = load_divisor(s.divisor, g);
  const auto r = chipfire::rank(g, d);
  std::string text = "rank " + std::to_string(r.rank) + "\n";
  if (r.obstruction) text += "obstruction " + chips_text(r.obstruction->chips()) + "\n";
  out.emit(chipfire::io::to_json(r), text);
  return kOk;
}

int run_gonality(const Settings& s, const Output& out) {
  const Multigraph g = load_graph(s.graph);
  const auto c = chipfire::gonality(g, gonality_options(s));
  std::ostringstream text;
  if (c.exact) {
    text << "gonality " << c.gonality << "\n";
  } else {
    text << "gonality in [" << c.lower_bound << ", " << c.upper_bound << "] (budget exhausted)\n";
  }
  if (c.witness.size()) text << "witness " << chips_text(c.witness.chips()) << "\n";
  out.emit(chipfire::io::to_json(c), text.str());
  return c.exact ? kOk : kBudgetExceeded;
}

int run_orient(const Settings& s, const Output& out) {
  const Multigraph g = load_graph(s.graph);
  const Divisor d = load_divisor(s.divisor, g);
  const auto o = chipfire::find_sourceless_rep(g, d);
  if (!o) {
    out.emit(json(nullptr), "no effective representative\n");
    return kOk;
  }
  std::ostringstream text;
  text << "divisor " << chips_text(chipfire::divisor_from_orientation(g, *o).chips()) << "\n";
  for (const auto& p : o->pairs) {
    text << p.u << " -> " << p.v << " x" << p.forward << ", " << p.v << " -> " << p.u << " x" << p.backward
         << ", unoriented " << p.unoriented << "\n";
  }
  out.emit(chipfire::io::to_json(*o), text.str());
  return kOk;
}

int run_bramble(const Settings& s, const Output& out) {
  Multigraph host = load_graph(s.graph);
  chipfire::BrambleFamily family;
  if (!s.bramble.empty()) {
    family = chipfire::io::bramble_from_json(parse_json(
        std::filesystem::is_regular_file(s.bramble) ? read_file(s.bramble) : s.bramble, "--bramble"));
  } else if (!s.other.empty()) {
    const Multigraph t2 = load_graph(s.other);
    family = chipfire::tree_product_bramble(host, t2);
    host = chipfire::cartesian_product(host, t2);
  } else {
    throw chipfire::InvalidInput("bramble needs --bramble FAMILY or --with TREE");
  }
  const auto kind = chipfire::classify(host, family);
  json j = {{"kind", chipfire::to_string(kind)}, {"family", chipfire::io::to_json(family)}};
  std::string text = "kind " + chipfire::to_string(kind) + "\n";
  if (kind != chipfire::BrambleKind::not_bramble) {
    const int ord = chipfire::order(host, family);
    j["order"] = ord;
    text += "order " + std::to_string(ord) + "\n";
  } else {
    j["order"] = nullptr;
  }
  out.emit(j, text);
  return kOk;
}

int run_verify(const Settings& s, const Output& out) {
  chipfire::verify::VerifyOptions opts;
  opts.seed = s.seed;
  opts.threads = s.threads;
  opts.slow = s.slow;
  const auto report = chipfire::verify::run_suite(s.suite, opts);
  json j = chipfire::verify::to_json(report, s.timing);
  std::string text = chipfire::verify::to_text(report);
  if (const auto* f = report.first_failure()) {
    j["first_failure"] = {{"description", f->description}, {"expected", f->expected}, {"computed", f->computed}};
    text += "first failure: " + f->description + "\n";
  }
  out.emit(j, text);
  if (report.budget_exceeded()) return kBudgetExceeded;
  return report.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chipfire: divisor theory and gonality on finite multigraphs"};
  app.require_subcommand(1);
  Settings s;

  const auto add_graph = [&](CLI::App* cmd) {
    auto* opt = cmd->add_option("--graph", s.graph, "graph JSON file or family spec (e.g. cycle:5, rook:3,3, A*B)");
    cmd->add_option("--family", s.graph, "family spec (alias of --graph)")->excludes(opt);
  };
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output,-o", s.output, "write output to this file instead of stdout");
  };
  const auto add_divisor = [&](CLI::App* cmd) {
    cmd->add_option("--divisor", s.divisor, "comma-separated chips (0,1,0,2) or divisor JSON file");
  };
  const auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--threads", s.threads, "worker threads (default: all cores)");
    cmd->add_option("--degree-cap", s.degree_cap, "highest degree to search")->check(CLI::PositiveNumber);
    cmd->add_option("--time-budget-s", s.time_budget_s, "wall-clock budget in seconds")
        ->check(CLI::PositiveNumber);
  };

  auto* graph = app.add_subcommand("graph", "print a graph, its DOT form, or the genus-1 census");
  add_graph(graph);
  add_common(graph);
  graph->add_flag("--dot", s.dot, "emit Graphviz DOT");
  graph->add_option("--census", s.census, "genus-1 census over VMIN,VMAX vertices");

  auto* product = app.add_subcommand("product", "Cartesian product G□H, optionally with a gonality report");
  add_graph(product);
  add_common(product);
  add_search(product);
  product->add_option("--with", s.other, "second factor H")->required();
  product->add_flag("--report", s.report, "compute factor and product gonalities");

  auto* reduce = app.add_subcommand("reduce", "q-reduce a divisor");
  add_graph(reduce);
  add_common(reduce);
  add_divisor(reduce);
  reduce->add_option("--base", s.base, "base vertex q");

  auto* burn = app.add_subcommand("burn", "run Dhar's burning algorithm");
  add_graph(burn);
  add_common(burn);
  add_divisor(burn);
  burn->add_option("--base", s.base, "fire source q");

  auto* rank = app.add_subcommand("rank", "Baker–Norine rank with an obstruction");
  add_graph(rank);
  add_common(rank);
  add_divisor(rank);

  auto* gon = app.add_subcommand("gonality", "exact divisorial gonality with a certificate");
  add_graph(gon);
  add_common(gon);
  add_search(gon);

  auto* orient = app.add_subcommand("orient", "sourceless partial orientation equivalent to a divisor");
  add_graph(orient);
  add_common(orient);
  add_divisor(orient);

  auto* bramble = app.add_subcommand("bramble", "classify a vertex-set family and compute its order");
  add_graph(bramble);
  add_common(bramble);
  bramble->add_option("--bramble", s.bramble, "family JSON (file or inline) on the --graph host");
  bramble->add_option("--with", s.other, "second tree; uses the cross bramble on the product");

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  add_common(verify);
  verify->add_option("suite", s.suite, "suite name")->required()->check(CLI::IsMember(chipfire::verify::suite_names()));
  verify->add_option("--seed", s.seed, "random seed");
  verify->add_option("--threads", s.threads, "worker threads (default: all cores)");
  verify->add_flag("--slow", s.slow, "include stretch instances");
  verify->add_flag("--timing", s.timing, "include wall-clock times in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  const Output out(s);
  try {
    if (*graph) return run_graph(s, out);
    if (*product) return run_product(s, out);
    if (*reduce) return run_reduce(s, out);
    if (*burn) return run_burn(s, out);
    if (*rank) return run_rank(s, out);
    if (*gon) return run_gonality(s, out);
    if (*orient) return run_orient(s, out);
    if (*bramble) return run_bramble(s, out);
    if (*verify) return run_verify(s, out);
  } catch (const chipfire::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const chipfire::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
