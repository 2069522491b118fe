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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oplabel/error.hpp"

namespace oplabel {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

// An undirected edge, always normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }
  constexpr bool disjoint_from(const Edge& e) const {
    return !touches(e.u) && !touches(e.v);
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

// A finite simple undirected graph on vertices 0..n-1. Immutable once built.
// Edges are sorted lexicographically by (u, v); EdgeId is the position in that
// order, so iteration is deterministic and independent of input order.
class Graph {
 public:
  Graph() = default;

  Graph(Vertex order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
    if (order_ < 0) {
      throw Error(ErrorCode::kInvalidArgument, "vertex count must be non-negative");
    }
    for (const Edge& e : edges_) {
      if (e.u == e.v) {
        throw Error(ErrorCode::kInvalidArgument,
                    "loop at vertex " + std::to_string(e.u) + " (graphs must be simple)");
      }
      if (e.u < 0 || e.v >= order_) {
        throw Error(ErrorCode::kInvalidArgument,
                    "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " has an endpoint outside 0.." + std::to_string(order_ - 1));
      }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
    }

    incidence_.assign(static_cast<std::size_t>(order_), {});
    for (EdgeId id = 0; id < size(); ++id) {
      const Edge& e = edges_[static_cast<std::size_t>(id)];
      incidence_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
      incidence_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
    }
    for (auto& list : incidence_) {
      std::sort(list.begin(), list.end(),
                [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    }
  }

  Vertex order() const { return order_; }
  EdgeId size() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }

  // Incident edges of v, ascending by neighbor.
  std::span<const Incidence> incident(Vertex v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= order_ || b >= order_ || a == b) return std::nullopt;
    auto list = incident(a);
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const Incidence& i, Vertex x) { return i.neighbor < x; });
    if (it == list.end() || it->neighbor != b) return std::nullopt;
    return it->edge;
  }

  // Like edge_id, but the edge is required to exist.
  EdgeId edge_between(Vertex a, Vertex b) const {
    auto id = edge_id(a, b);
    if (!id) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    return *id;
  }

  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  bool is_complete() const {
    return static_cast<std::int64_t>(size()) ==
           static_cast<std::int64_t>(order_) * (order_ - 1) / 2;
  }

  // Connected in the usual sense; the empty graph and K_1 count as connected.
  bool is_connected() const {
    if (order_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(order_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    Vertex reached = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : incident(x)) {
        auto& mark = seen[static_cast<std::size_t>(inc.neighbor)];
        if (!mark) {
          mark = 1;
          ++reached;
          stack.push_back(inc.neighbor);
        }
      }
    }
    return reached == order_;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  Vertex order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

inline Graph make_complete(Vertex n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

enum class Family { kCycle, kPath, kStar };

// cycle: C_size; path: P_size (size vertices); star: K_{1,size} with center 0.
inline Graph make_family(Family kind, Vertex size) {
  std::vector<Edge> edges;
  switch (kind) {
    case Family::kCycle:
      if (size < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs at least 3 vertices");
      for (Vertex i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
      return Graph(size, std::move(edges));
    case Family::kPath:
      if (size < 1) throw Error(ErrorCode::kInvalidArgument, "path needs at least 1 vertex");
      for (Vertex i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
      return Graph(size, std::move(edges));
    case Family::kStar:
      if (size < 1) throw Error(ErrorCode::kInvalidArgument, "star needs at least 1 leaf");
      for (Vertex i = 1; i <= size; ++i) edges.emplace_back(0, i);
      return Graph(size + 1, std::move(edges));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

}  // namespace oplabel
