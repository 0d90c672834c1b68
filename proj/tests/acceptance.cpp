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

// Runs the verification suites behind each acceptance criterion and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
// Usage: acceptance [--slow] [--seed N] [--threads N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "chipfire/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
};

}  // namespace

int main(int argc, char** argv) {
  chipfire::verify::VerifyOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--slow") {
      opts.slow = true;
    } else if (arg == "--seed" && i + 1 < argc) {
      opts.seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg == "--threads" && i + 1 < argc) {
      opts.threads = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    } else {
      std::fprintf(stderr, "usage: %s [--slow] [--seed N] [--threads N]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "rook graphs gon(Km□Kn) = (m-1)n", {"rook"}},
      {2, "genus-1 census × K2 gives min(|V|, 4)", {"genus1-k2"}},
      {3, "gon(B2□B2) = 4 and gon(B2,1□K3) = 6", {"nonsimple"}},
      {4, "equality classification against floor((g+3)/2)", {"table1", "conjecture"}},
      {5, "replicated divisors and the product upper bound", {"upperbound"}},
      {6, "divisors beating the expected product gonality", {"arbitrarily-large", "example-simple"}},
      {7, "Riemann–Roch on 200 random instances", {"riemann-roch"}},
      {8, "gonality bounds in terms of genus", {"bounds"}},
      {9, "cross brambles on tree products", {"bramble"}},
      {10, "effective classes vs sourceless orientations", {"spencer"}},
      {11, "burning properties on complete and rook graphs", {"burning"}},
      {12, "thread-count independent certificates", {"determinism"}},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    bool pass = true;
    double seconds = 0;
    std::string detail;
    for (const auto& suite : c.suites) {
      const auto report = chipfire::verify::run_suite(suite, opts);
      seconds += report.elapsed.count();
      if (!report.passed()) {
        pass = false;
        if (const auto* f = report.first_failure(); f && detail.empty()) {
          detail = " [" + suite + ": " + f->description + "; expected " + f->expected + ", computed " +
                   f->computed + "]";
        }
      }
      for (const auto& check : report.checks) {
        if (check.informational) {
          std::printf("    note (%s): %s: expected %s, computed %s\n", suite.c_str(), check.description.c_str(),
                      check.expected.c_str(), check.computed.c_str());
        }
      }
    }
    failed += !pass;
    std::printf("criterion %2d: %s  %s (%.2f s)%s\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(), seconds,
                detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
