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

// Edge accounting around an unlabeled vertex v. A0 and A1 are the subgraphs
// induced on N_0(v) and N_1(v). For a label b, every b-edge lies in exactly
// one of: A_b, the star at v, between A0 and A1, A_{1-b}, or elsewhere (an
// endpoint outside N[v], which cannot happen in K_n). Hence
//
//   |b-edges in A_{1-b}| = |b-edges| - |b-edges in A_b| - |b-edges at v|
//                          - |b-edges between A0 and A1| - |b-edges elsewhere|

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "oplabel/error.hpp"
#include "oplabel/graph.hpp"
#include "oplabel/labeling.hpp"

namespace oplabel {

struct SideCounts {
  int total = 0;
  int same_side = 0;
  int incident = 0;
  int cross = 0;
  int opposite_side = 0;
  int elsewhere = 0;

  // The right-hand side of the identity, computed from the other terms.
  int opposite_side_by_identity() const { return total - same_side - incident - cross - elsewhere; }

  friend bool operator==(const SideCounts&, const SideCounts&) = default;
};

struct PartitionCounts {
  Vertex vertex = 0;
  int a0_size = 0;
  int a1_size = 0;
  // zero.same_side counts 0-edges in A0 and zero.opposite_side 0-edges in A1.
  SideCounts zero;
  // one.same_side counts 1-edges in A1 and one.opposite_side 1-edges in A0.
  SideCounts one;
};

namespace detail {

inline std::vector<Vertex> neighbors_with_label(const EdgeLabeling& f, Vertex v, int bit) {
  std::vector<Vertex> out;
  for (const Incidence& inc : f.graph().incident(v)) {
    if (f.label(inc.edge) == bit) out.push_back(inc.neighbor);
  }
  return out;
}

inline int edges_within(const EdgeLabeling& f, const std::vector<Vertex>& side, int bit) {
  int count = 0;
  for (std::size_t i = 0; i < side.size(); ++i) {
    for (std::size_t j = i + 1; j < side.size(); ++j) {
      if (auto id = f.graph().edge_id(side[i], side[j]); id && f.label(*id) == bit) ++count;
    }
  }
  return count;
}

inline int edges_between(const EdgeLabeling& f, const std::vector<Vertex>& a,
                         const std::vector<Vertex>& b, int bit) {
  int count = 0;
  for (Vertex x : a) {
    for (Vertex y : b) {
      if (auto id = f.graph().edge_id(x, y); id && f.label(*id) == bit) ++count;
    }
  }
  return count;
}

// Edges with label `bit` having an endpoint outside N[v].
inline int edges_elsewhere(const EdgeLabeling& f, Vertex v, int bit) {
  const Graph& g = f.graph();
  std::vector<char> closed(static_cast<std::size_t>(g.order()), 0);
  closed[static_cast<std::size_t>(v)] = 1;
  for (const Incidence& inc : g.incident(v)) closed[static_cast<std::size_t>(inc.neighbor)] = 1;
  int count = 0;
  for (EdgeId id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    if (f.label(id) == bit &&
        (!closed[static_cast<std::size_t>(e.u)] || !closed[static_cast<std::size_t>(e.v)])) {
      ++count;
    }
  }
  return count;
}

// Both label classes are handled by this one routine with the roles of A0
// and A1 swapped.
inline SideCounts side_counts(const EdgeLabeling& f, Vertex v, int bit, const std::vector<Vertex>& same,
                              const std::vector<Vertex>& opposite) {
  SideCounts s;
  auto counts = edge_counts(f);
  s.total = bit ? counts.ones : counts.zeros;
  s.same_side = edges_within(f, same, bit);
  s.incident = static_cast<int>(same.size());
  s.cross = edges_between(f, same, opposite, bit);
  s.opposite_side = edges_within(f, opposite, bit);
  s.elsewhere = edges_elsewhere(f, v, bit);
  return s;
}

}  // namespace detail

inline PartitionCounts partition_counts(const EdgeLabeling& f, Vertex v) {
  if (v < 0 || v >= f.graph().order()) throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
  if (f.margin(v) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(v) + " is labeled; partition counts need an unlabeled vertex");
  }
  PartitionCounts p;
  p.vertex = v;
  const auto a0 = detail::neighbors_with_label(f, v, 0);
  const auto a1 = detail::neighbors_with_label(f, v, 1);
  p.a0_size = static_cast<int>(a0.size());
  p.a1_size = static_cast<int>(a1.size());
  p.zero = detail::side_counts(f, v, 0, a0, a1);
  p.one = detail::side_counts(f, v, 1, a1, a0);
  return p;
}

// The largest number of 0-edges from one A0 vertex into A1 (and, mirrored,
// 1-edges from one A1 vertex into A0). The lower bound below presumes both
// are at most 1.
inline int max_cross_degree(const EdgeLabeling& f, Vertex v, int bit) {
  const auto from = detail::neighbors_with_label(f, v, bit);
  const auto to = detail::neighbors_with_label(f, v, 1 - bit);
  int best = 0;
  for (Vertex x : from) {
    int count = 0;
    for (Vertex y : to) {
      if (auto id = f.graph().edge_id(x, y); id && f.label(*id) == bit) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

struct A1ZeroEdgeBound {
  int n = 0;
  std::int64_t value = 0;
  // n mod 4, either 1 or 3.
  int residue = 0;
  // Smallest n for which the value is stated to be at least 1.
  int valid_from = 0;
  bool applicable = false;
  std::string formula;
};

// Lower bound on 0-edges inside A1 for an unlabeled vertex of K_n in an
// edge-friendly labeling whose A0 vertices each send at most one 0-edge into
// A1:  ⌊C(n,2)/2⌋ - C((n-1)/2, 2) - (n-1)/2 - (n-1)/2.
inline A1ZeroEdgeBound a1_zero_edge_lower_bound(int n) {
  if (n % 2 == 0 || n < 7) {
    throw Error(ErrorCode::kInvalidArgument, "bound is defined for odd n >= 7, got " + std::to_string(n));
  }
  const std::int64_t nn = n;
  const std::int64_t half = (nn - 1) / 2;
  const std::int64_t edges = nn * (nn - 1) / 2;
  A1ZeroEdgeBound b;
  b.n = n;
  b.residue = n % 4;
  if (b.residue == 1) {
    b.value = edges / 2 - half * (half - 1) / 2 - half - half;
    b.valid_from = 9;
    b.formula = "C(n,2)/2 - C((n-1)/2,2) - (n-1)/2 - (n-1)/2";
  } else {
    b.value = (edges - 1) / 2 - half * (half - 1) / 2 - half - half;
    b.valid_from = 11;
    b.formula = "(C(n,2)-1)/2 - C((n-1)/2,2) - (n-1)/2 - (n-1)/2";
  }
  b.applicable = n >= b.valid_from;
  return b;
}

// |A0|^2 > 2|A0|: with |A0| = |A1| = a there are a^2 edges between the two
// sides, more than 2a exactly when a > 2, i.e. n >= 7 in K_n.
inline bool counting_threshold(std::int64_t a0) {
  if (a0 < 0) throw Error(ErrorCode::kInvalidArgument, "|A0| must be non-negative");
  return a0 * a0 > 2 * a0;
}

}  // namespace oplabel
