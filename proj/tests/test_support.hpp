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

// Test-only oracles and generators. Nothing here calls into the code path it
// is used to check: margins are recounted from raw labels, trustiness is
// decided by actually flipping edges, and balanced moves are drawn directly.

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <tuple>
#include <utility>
#include <vector>

#include "oplabel/oplabel.hpp"

namespace oplabel::testing {

inline std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// Labeling from an explicit {u, v, bit} list; every edge must be listed.
inline EdgeLabeling labeled(std::shared_ptr<const Graph> g,
                            std::initializer_list<std::tuple<Vertex, Vertex, int>> entries) {
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(g->size()), 2);
  for (auto [u, v, bit] : entries) labels.at(static_cast<std::size_t>(g->edge_between(u, v))) = static_cast<std::uint8_t>(bit);
  return EdgeLabeling(std::move(g), std::move(labels));
}

inline EdgeLabeling labeled_in_order(std::shared_ptr<const Graph> g, std::vector<std::uint8_t> bits) {
  return EdgeLabeling(std::move(g), std::move(bits));
}

// |N_1(v)| - |N_0(v)| by scanning every edge.
inline int brute_margin(const EdgeLabeling& f, Vertex v) {
  int m = 0;
  const Graph& g = f.graph();
  for (EdgeId id = 0; id < g.size(); ++id) {
    if (g.edge(id).touches(v)) m += f.labels()[static_cast<std::size_t>(id)] ? 1 : -1;
  }
  return m;
}

inline VertexValue brute_value(const EdgeLabeling& f, Vertex v) {
  int m = brute_margin(f, v);
  return m > 0 ? VertexValue::kOne : m < 0 ? VertexValue::kZero : VertexValue::kUnlabeled;
}

// Trusty by definition: flip each incident edge in a copy of the raw labels
// and see whether the induced value moves.
inline bool brute_trusty(const EdgeLabeling& f, Vertex v) {
  const Graph& g = f.graph();
  const VertexValue before = brute_value(f, v);
  for (const Incidence& inc : g.incident(v)) {
    std::vector<std::uint8_t> bits(f.labels().begin(), f.labels().end());
    bits[static_cast<std::size_t>(inc.edge)] ^= 1;
    EdgeLabeling flipped(f.graph_ptr(), std::move(bits));
    if (brute_value(flipped, v) != before) return false;
  }
  return true;
}

inline std::vector<VertexValue> brute_values(const EdgeLabeling& f) {
  std::vector<VertexValue> out;
  for (Vertex v = 0; v < f.graph().order(); ++v) out.push_back(brute_value(f, v));
  return out;
}

// A uniformly random balanced flip set with `pairs` 0-edges and `pairs`
// 1-edges, or an empty move if the labeling lacks enough of either.
inline SwitchMove random_balanced_move(const EdgeLabeling& f, Prng& rng, int pairs) {
  std::vector<EdgeId> zeros;
  std::vector<EdgeId> ones;
  for (EdgeId id = 0; id < f.graph().size(); ++id) (f.label(id) ? ones : zeros).push_back(id);
  SwitchMove m{{}, "random"};
  if (static_cast<int>(zeros.size()) < pairs || static_cast<int>(ones.size()) < pairs) return m;
  auto pick = [&](std::vector<EdgeId>& pool) {
    for (int i = 0; i < pairs; ++i) {
      auto j = static_cast<std::size_t>(i) + rng.below(pool.size() - static_cast<std::size_t>(i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      m.flips.push_back(pool[static_cast<std::size_t>(i)]);
    }
  };
  pick(zeros);
  pick(ones);
  return m;
}

// Random simple graph on 1..max_n vertices of a random density.
inline std::shared_ptr<const Graph> random_small_graph(Prng& rng, Vertex max_n) {
  auto n = static_cast<Vertex>(1 + rng.below(static_cast<std::uint64_t>(max_n)));
  return share(random_gnp(n, rng.unit(), rng));
}

}  // namespace oplabel::testing
