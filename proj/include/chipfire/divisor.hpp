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
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "chipfire/multigraph.hpp"

namespace chipfire {

using Chips = std::int64_t;

namespace detail {

inline Chips add_chips(Chips a, Chips b) {
#ifndef NDEBUG
  Chips out;
  [[maybe_unused]] bool overflow = __builtin_add_overflow(a, b, &out);
  assert(!overflow && "chip count overflow");
  return out;
#else
  return a + b;
#endif
}

inline Chips mul_chips(Chips a, Chips b) {
#ifndef NDEBUG
  Chips out;
  [[maybe_unused]] bool overflow = __builtin_mul_overflow(a, b, &out);
  assert(!overflow && "chip count overflow");
  return out;
#else
  return a * b;
#endif
}

}  // namespace detail

/// Integer chip vector indexed by vertex. Carries no reference to its graph;
/// operations that need the graph take it explicitly.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::size_t n) : chips_(n, 0) {}
  explicit Divisor(std::vector<Chips> chips) : chips_(std::move(chips)) {}
  Divisor(std::initializer_list<Chips> chips) : chips_(chips) {}

  /// `count` chips on `v`, zero elsewhere.
  static Divisor point(std::size_t n, Vertex v, Chips count = 1) {
    Divisor d(n);
    d.chips_.at(v) = count;
    return d;
  }

  std::size_t size() const { return chips_.size(); }
  Chips operator[](Vertex v) const { return chips_[v]; }
  Chips& operator[](Vertex v) { return chips_[v]; }
  const std::vector<Chips>& chips() const { return chips_; }
  std::vector<Chips>& chips() { return chips_; }

  Chips degree() const { return std::accumulate(chips_.begin(), chips_.end(), Chips{0}); }

  bool is_effective() const {
    return std::all_of(chips_.begin(), chips_.end(), [](Chips c) { return c >= 0; });
  }

  Divisor& operator+=(const Divisor& other) {
    check_size(other);
    for (std::size_t i = 0; i < chips_.size(); ++i) chips_[i] = detail::add_chips(chips_[i], other.chips_[i]);
    return *this;
  }
  Divisor& operator-=(const Divisor& other) {
    check_size(other);
    for (std::size_t i = 0; i < chips_.size(); ++i) chips_[i] = detail::add_chips(chips_[i], -other.chips_[i]);
    return *this;
  }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }

  /// Lexicographic on the chip vector.
  friend auto operator<=>(const Divisor&, const Divisor&) = default;
  friend bool operator==(const Divisor&, const Divisor&) = default;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < chips_.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(chips_[i]);
    }
    return out + ")";
  }

 private:
  void check_size(const Divisor& other) const {
    if (other.size() != size()) throw InvalidInput("divisor sizes differ");
  }

  std::vector<Chips> chips_;
};

inline void check_divisor(const Multigraph& g, const Divisor& d) {
  if (d.size() != g.num_vertices()) {
    throw InvalidInput("divisor has " + std::to_string(d.size()) + " entries but graph has " +
                       std::to_string(g.num_vertices()) + " vertices");
  }
}

namespace detail {

/// In-place set firing on a raw chip vector; `in_set` is a vertex mask.
inline void fire_mask(const Multigraph& g, std::span<Chips> chips, const std::vector<bool>& in_set,
                      Chips times) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!in_set[v]) continue;
    for (const auto& nb : g.neighbors(v)) {
      if (in_set[nb.vertex]) continue;
      const Chips flow = mul_chips(times, nb.mult);
      chips[v] = add_chips(chips[v], -flow);
      chips[nb.vertex] = add_chips(chips[nb.vertex], flow);
    }
  }
}

}  // namespace detail

/// D - times * L * 1_S: every vertex of S sends `times` chips along each edge
/// leaving S. Negative `times` un-fires. Debt is allowed.
inline Divisor fire_set(const Multigraph& g, Divisor d, std::span<const Vertex> set, Chips times = 1) {
  check_divisor(g, d);
  std::vector<bool> mask(g.num_vertices(), false);
  for (Vertex v : set) {
    if (v >= g.num_vertices()) throw InvalidInput("firing set vertex " + std::to_string(v) + " out of range");
    mask[v] = true;
  }
  detail::fire_mask(g, d.chips(), mask, times);
  return d;
}

inline Divisor fire_set(const Multigraph& g, Divisor d, std::initializer_list<Vertex> set, Chips times = 1) {
  return fire_set(g, std::move(d), std::span<const Vertex>(set.begin(), set.size()), times);
}

/// K(v) = val(v) - 2.
inline Divisor canonical_divisor(const Multigraph& g) {
  Divisor k(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) k[v] = g.valence(v) - 2;
  return k;
}

}  // namespace chipfire
