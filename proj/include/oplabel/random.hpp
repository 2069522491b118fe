// Copyright 2026 The oplabel Authors
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

#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "oplabel/graph.hpp"
#include "oplabel/labeling.hpp"

namespace oplabel {

// Seeded generator with fully specified draws: raw std::mt19937_64 output
// (whose sequence the standard fixes) reduced by rejection sampling, never
// by a std::*_distribution, so streams are reproducible across toolchains
// and languages.
class Prng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Uniform over all edge-friendly labelings: picks ⌊m/2⌋ or ⌈m/2⌉ ones (a fair
// coin when m is odd), then a uniform subset of that size by partial
// Fisher-Yates.
inline EdgeLabeling random_edge_friendly(std::shared_ptr<const Graph> graph, Prng& rng) {
  const auto m = static_cast<std::uint64_t>(graph->size());
  std::uint64_t ones = m / 2;
  if (m % 2 == 1 && rng.below(2) == 1) ++ones;
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint8_t> labels(m, 0);
  for (std::uint64_t i = 0; i < ones; ++i) {
    std::uint64_t j = i + rng.below(m - i);
    std::swap(order[i], order[j]);
    labels[static_cast<std::size_t>(order[i])] = 1;
  }
  return EdgeLabeling(std::move(graph), std::move(labels));
}

// Arbitrary labeling, each bit a fair coin.
inline EdgeLabeling random_labeling(std::shared_ptr<const Graph> graph, Prng& rng) {
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(graph->size()));
  for (auto& bit : labels) bit = static_cast<std::uint8_t>(rng.below(2));
  return EdgeLabeling(std::move(graph), std::move(labels));
}

// Erdős–Rényi G(n, p), pairs visited in lexicographic order.
inline Graph random_gnp(Vertex n, double p, Prng& rng) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "density must lie in [0, 1]");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

// Random recursive spanning tree plus each remaining pair with probability p.
inline Graph random_connected(Vertex n, double p, Prng& rng) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "random graph needs n >= 1");
  std::vector<Edge> edges;
  std::vector<char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto mark = [&](Vertex a, Vertex b) {
    present[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = 1;
    present[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)] = 1;
  };
  for (Vertex v = 1; v < n; ++v) {
    auto parent = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
    edges.emplace_back(parent, v);
    mark(parent, v);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!present[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] &&
          rng.chance(p)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, std::move(edges));
}

// Connected graph with an even, positive number of edges; n >= 3.
inline Graph random_connected_even_size(Vertex n, double p, Prng& rng) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "even-size connected sample needs n >= 3");
  Graph g = random_connected(n, p, rng);
  if (g.size() % 2 == 0) return g;

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  if (!g.is_complete()) {
    std::vector<Edge> missing;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!g.adjacent(u, v)) missing.emplace_back(u, v);
      }
    }
    edges.push_back(missing[static_cast<std::size_t>(rng.below(missing.size()))]);
    return Graph(n, std::move(edges));
  }
  // K_n has a cycle through every edge, so dropping any one keeps it connected.
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng.below(edges.size())));
  return Graph(n, std::move(edges));
}

}  // namespace oplabel
