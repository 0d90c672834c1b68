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
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire {

namespace detail {

/// Walks, in ascending lexicographic order, all chip vectors of a fixed
/// degree whose entry at vertex 0 is at least `first_min` and whose entry at
/// every other vertex v is at most val(v) - 1. Every 0-reduced effective
/// divisor of that degree (with enough chips on vertex 0) is among them.
class CandidateCursor {
 public:
  CandidateCursor(const Multigraph& g, Chips degree, Chips first_min) : caps_(g.num_vertices()) {
    const std::size_t n = g.num_vertices();
    caps_[0] = degree;
    for (Vertex v = 1; v < n; ++v) caps_[v] = std::max<Chips>(0, g.valence(v) - 1);
    Chips room = 0;
    for (Vertex v = 1; v < n; ++v) room += caps_[v];
    Chips first = std::max(first_min, degree - room);
    if (first > degree || degree < 0) {
      done_ = true;
      return;
    }
    current_.assign(n, 0);
    current_[0] = first;
    fill_suffix(1, degree - first);
  }

  bool done() const { return done_; }
  const std::vector<Chips>& current() const { return current_; }

  void advance() {
    const std::size_t n = current_.size();
    Chips suffix = 0;
    for (std::size_t i = n; i-- > 0;) {
      if (i + 1 < n) {
        suffix += current_[i + 1];
        if (suffix >= 1 && current_[i] < caps_[i]) {
          ++current_[i];
          fill_suffix(i + 1, suffix - 1);
          return;
        }
      }
    }
    done_ = true;
  }

 private:
  /// Lexicographically smallest fill of positions from..n-1 with `total` chips.
  void fill_suffix(std::size_t from, Chips total) {
    for (std::size_t j = current_.size(); j-- > from;) {
      current_[j] = std::min(caps_[j], total);
      total -= current_[j];
    }
  }

  std::vector<Chips> caps_;
  std::vector<Chips> current_;
  bool done_ = false;
};

/// Upper bound on the number of candidates at a degree (stars and bars).
inline double candidate_bound(std::size_t n, Chips degree) {
  double count = 1.0;
  for (Chips i = 1; i <= degree; ++i) count = count * static_cast<double>(n - 1 + i) / static_cast<double>(i);
  return count;
}

}  // namespace detail

/// Largest stars-and-bars count enumerate_effective_classes will materialize.
inline constexpr double kEnumerationBudget = 2e7;

/// One 0-reduced representative per class of effective degree-d divisors,
/// sorted lexicographically.
inline std::vector<Divisor> enumerate_effective_classes(const Multigraph& g, Chips degree) {
  if (degree < 0) throw InvalidInput("degree must be nonnegative");
  if (detail::candidate_bound(g.num_vertices(), degree) > kEnumerationBudget) {
    throw BudgetExceeded("too many effective divisors of degree " + std::to_string(degree));
  }
  std::vector<Divisor> out;
  detail::Burner burner(g);
  for (detail::CandidateCursor cursor(g, degree, 0); !cursor.done(); cursor.advance()) {
    if (burner.burns_all(cursor.current(), 0)) out.emplace_back(cursor.current());
  }
  return out;
}

struct GonalityOptions {
  /// Highest degree to search; the search never goes past g + 1 anyway.
  std::optional<int> degree_cap;
  /// Wall-clock budget; when exhausted the result brackets the gonality.
  std::optional<std::chrono::duration<double>> time_budget;
  /// Worker count; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// A proven upper bound (for instance the expected gonality of a product).
  std::optional<int> known_upper_bound;
};

struct GonalityCertificate {
  bool exact = false;
  /// Meaningful when exact.
  int gonality = 0;
  int lower_bound = 1;
  int upper_bound = 0;
  /// Lexicographically least 0-reduced divisor of positive rank at the
  /// gonality; empty if none was found within budget.
  Divisor witness;
  /// Entry i counts the 0-reduced candidate classes examined at degree i + 1.
  std::vector<std::uint64_t> classes_examined;
  std::chrono::duration<double> elapsed{};
};

namespace detail {

struct DegreeSearch {
  std::optional<Divisor> witness;
  std::uint64_t classes = 0;
  bool aborted = false;
};

/// Scans the degree-d candidates with D(0) >= 1 (a positive-rank class has
/// such a 0-reduced form) and returns the first winner in enumeration order.
/// Workers pull chunks in order, so every candidate before the reported one
/// has been examined whatever the thread count.
class GonalitySearch {
 public:
  GonalitySearch(const Multigraph& g, unsigned threads,
                 std::optional<std::chrono::steady_clock::time_point> deadline)
      : g_(g), threads_(std::max(1u, threads)), deadline_(deadline) {}

  DegreeSearch run(Chips degree) {
    cursor_.emplace(g_, degree, 1);
    next_index_ = 0;
    best_ = kNone;
    aborted_ = false;
    chunks_.clear();
    winner_.reset();
    if (threads_ == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads_; ++t) pool.emplace_back([this] { work(); });
    }
    DegreeSearch out;
    out.aborted = aborted_.load();
    const std::uint64_t best = best_.load();
    for (const auto& c : chunks_) {
      if (c.first <= best) out.classes += c.second;
    }
    if (best != kNone) out.witness = winner_;
    return out;
  }

 private:
  static constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  static constexpr std::size_t kChunk = 256;

  bool past_deadline() const { return deadline_ && std::chrono::steady_clock::now() > *deadline_; }

  void work() {
    Burner burner(g_);
    std::vector<Chips> scratch;
    std::vector<std::vector<Chips>> batch;
    while (true) {
      std::uint64_t start = 0;
      {
        std::lock_guard lock(mutex_);
        if (aborted_ || cursor_->done() || next_index_ > best_.load()) return;
        start = next_index_;
        batch.clear();
        while (batch.size() < kChunk && !cursor_->done()) {
          batch.push_back(cursor_->current());
          cursor_->advance();
        }
        next_index_ += batch.size();
      }
      std::uint64_t reduced = 0;
      for (std::size_t i = 0; i < batch.size(); ++i) {
        const std::uint64_t index = start + i;
        if (index > best_.load()) break;
        if ((i & 31) == 0 && past_deadline()) {
          aborted_ = true;
          break;
        }
        if (!burner.burns_all(batch[i], 0)) continue;
        ++reduced;
        if (positive_rank_effective(burner, batch[i], scratch)) {
          std::lock_guard lock(mutex_);
          if (index < best_.load()) {
            best_ = index;
            winner_ = Divisor(batch[i]);
          }
          break;
        }
      }
      std::lock_guard lock(mutex_);
      chunks_.emplace_back(start, reduced);
    }
  }

  const Multigraph& g_;
  unsigned threads_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::optional<CandidateCursor> cursor_;
  std::mutex mutex_;
  std::uint64_t next_index_ = 0;
  std::atomic<std::uint64_t> best_{kNone};
  std::atomic<bool> aborted_{false};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks_;
  std::optional<Divisor> winner_;
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detail

/// Exact gonality by exhaustive search over effective divisor classes,
/// degree by degree. The search is capped at min(g + 1, known upper bound,
/// user cap); if the cap or the time budget stops it early the certificate
/// is not exact and only brackets the gonality.
inline GonalityCertificate gonality(const Multigraph& g, const GonalityOptions& opts = {}) {
  const auto started = std::chrono::steady_clock::now();
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (opts.time_budget) {
    deadline = started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(*opts.time_budget);
  }
  int proven_upper = static_cast<int>(g.genus()) + 1;
  if (opts.known_upper_bound) {
    if (*opts.known_upper_bound < 1) throw InvalidInput("known upper bound must be positive");
    proven_upper = std::min(proven_upper, *opts.known_upper_bound);
  }
  int cap = proven_upper;
  if (opts.degree_cap) {
    if (*opts.degree_cap < 1) throw InvalidInput("degree cap must be positive");
    cap = std::min(cap, *opts.degree_cap);
  }

  GonalityCertificate cert;
  cert.upper_bound = proven_upper;
  detail::GonalitySearch search(g, detail::resolve_threads(opts.threads), deadline);
  for (int d = 1; d <= cap; ++d) {
    auto found = search.run(d);
    cert.classes_examined.push_back(found.classes);
    if (found.witness) {
      cert.witness = std::move(*found.witness);
      cert.lower_bound = d;
      cert.upper_bound = d;
      cert.exact = true;
      cert.gonality = d;
      break;
    }
    if (found.aborted) {
      cert.lower_bound = d;
      break;
    }
    cert.lower_bound = d + 1;
  }
  if (!cert.exact && cert.lower_bound > proven_upper) {
    throw InvalidInput("no positive-rank divisor up to the supplied upper bound " + std::to_string(proven_upper));
  }
  cert.elapsed = std::chrono::steady_clock::now() - started;
  return cert;
}

enum class Factor { first, second };

/// Copies a positive-rank divisor on one factor onto every fiber of G□H:
/// (v, w) gets F(v) when F lives on G, F(w) when it lives on H.
inline Divisor replicate_divisor(const Divisor& f, const Multigraph& g, const Multigraph& h, Factor side) {
  const Multigraph& home = side == Factor::first ? g : h;
  check_divisor(home, f);
  if (!f.is_effective() || !has_positive_rank(home, f)) {
    throw InvalidInput("replicated divisor must be effective with positive rank on its factor");
  }
  const ProductIndex idx(g.num_vertices(), h.num_vertices());
  Divisor out(idx.size());
  for (Vertex i = 0; i < g.num_vertices(); ++i) {
    for (Vertex j = 0; j < h.num_vertices(); ++j) out[idx(i, j)] = side == Factor::first ? f[i] : f[j];
  }
  return out;
}

struct ProductReport {
  int gonality_first = 0;
  int gonality_second = 0;
  /// min(gon(G)·|V(H)|, gon(H)·|V(G)|).
  int expected = 0;
  bool exact = false;
  /// Meaningful when exact.
  int actual = 0;
  int actual_lower = 0;
  int actual_upper = 0;
  /// floor((g(G□H) + 3) / 2).
  int conjecture_bound = 0;
  /// expected - actual when exact, expected - actual_upper otherwise.
  int gap_expected_minus_actual = 0;
  bool equality_with_conjecture = false;
  GonalityCertificate certificate;
};

struct ProductOptions {
  GonalityOptions factor_options;
  GonalityOptions product_options;
  /// Order of a strict bramble on the product, if the caller has one.
  int bramble_lower_bound = 1;
};

inline ProductReport product_report(const Multigraph& g, const Multigraph& h, const ProductOptions& opts = {}) {
  ProductReport report;
  const auto gon_g = gonality(g, opts.factor_options);
  const auto gon_h = gonality(h, opts.factor_options);
  if (!gon_g.exact || !gon_h.exact) throw BudgetExceeded("factor gonality out of budget");
  report.gonality_first = gon_g.gonality;
  report.gonality_second = gon_h.gonality;
  const int vg = static_cast<int>(g.num_vertices());
  const int vh = static_cast<int>(h.num_vertices());
  report.expected = std::min(gon_g.gonality * vh, gon_h.gonality * vg);
  const Multigraph product = cartesian_product(g, h);
  report.conjecture_bound = static_cast<int>((product.genus() + 3) / 2);

  GonalityOptions popts = opts.product_options;
  popts.known_upper_bound = popts.known_upper_bound ? std::min(*popts.known_upper_bound, report.expected)
                                                    : report.expected;
  report.certificate = gonality(product, popts);
  report.exact = report.certificate.exact;
  report.actual_lower = std::max({report.certificate.lower_bound, opts.bramble_lower_bound, 1});
  report.actual_upper = report.certificate.upper_bound;
  if (report.exact) report.actual = report.certificate.gonality;
  report.gap_expected_minus_actual = report.expected - (report.exact ? report.actual : report.actual_upper);
  report.equality_with_conjecture = report.exact && report.actual == report.conjecture_bound;
  return report;
}

}  // namespace chipfire
