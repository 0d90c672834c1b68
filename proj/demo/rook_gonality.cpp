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

// Walks through the library on the rook graph K3□K3: build it, reduce a
// divisor, compute its rank, and find the gonality with a certificate.

#include <iostream>

#include "chipfire/catalog.hpp"
#include "chipfire/gonality.hpp"
#include "chipfire/io.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"

int main() {
  using namespace chipfire;

  const Multigraph k3 = make("complete:3");
  const Multigraph rook = cartesian_product(k3, k3);
  std::cout << "K3□K3: " << rook.num_vertices() << " vertices, " << rook.num_edges() << " edges, genus "
            << rook.genus() << "\n";

  // Two chips on every vertex of the first row, i.e. a replicated K3 divisor.
  const ProductIndex idx(3, 3);
  Divisor d(rook.num_vertices());
  for (Vertex j = 0; j < 3; ++j) d[idx(0, j)] = 2;
  std::cout << "D            = " << d.to_string() << "\n";
  std::cout << "D reduced @8 = " << q_reduce(rook, d, idx(2, 2)).to_string() << "\n";
  std::cout << "rank(D)      = " << rank(rook, d).rank << "\n";

  const auto cert = gonality(rook);
  std::cout << "gon(K3□K3)   = " << cert.gonality << " with witness " << cert.witness.to_string() << "\n";
  std::cout << io::to_json(cert).dump() << "\n";
  return 0;
}
