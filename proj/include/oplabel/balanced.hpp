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

// Strongly edge-balanced labelings of connected even-size graphs.
//
// Odd-degree vertices are joined in consecutive pairs through new degree-2
// auxiliary vertices, making every degree even. An Euler tour of the result
// is labeled 0,1,0,1,... and the auxiliaries are deleted again. Every vertex
// that was already even sees each tour visit contribute one 0 and one 1, so
// it ends up unlabeled; each paired couple of odd vertices receives opposite
// labels, so v0 = v1.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "oplabel/error.hpp"
#include "oplabel/graph.hpp"
#include "oplabel/labeling.hpp"

namespace oplabel {

struct AugmentedGraph {
  std::shared_ptr<const Graph> base;
  // Base vertices keep their indices; auxiliary i is vertex base->order() + i.
  std::shared_ptr<const Graph> graph;
  std::vector<Vertex> aux_vertices;
  // pairs[i] is the couple of odd-degree base vertices joined through aux i.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  // base_edge_map[id] is the augmented EdgeId of base edge id.
  std::vector<EdgeId> base_edge_map;
};

struct EulerTour {
  Vertex start = 0;
  std::vector<EdgeId> edges;
  // walk[i] is the vertex the tour stands at before taking edges[i];
  // walk.size() == edges.size() + 1 and walk.back() == start.
  std::vector<Vertex> walk;
};

inline std::vector<Vertex> odd_degree_vertices(const Graph& g) {
  std::vector<Vertex> odd;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 == 1) odd.push_back(v);
  }
  return odd;
}

inline AugmentedGraph augment(std::shared_ptr<const Graph> base) {
  AugmentedGraph a;
  a.base = base;
  auto odd = odd_degree_vertices(*base);
  if (odd.size() % 2 != 0) throw invariant_violation("odd number of odd-degree vertices");

  std::vector<Edge> edges(base->edges().begin(), base->edges().end());
  Vertex next = base->order();
  for (std::size_t i = 0; i < odd.size(); i += 2) {
    a.aux_vertices.push_back(next);
    a.pairs.emplace_back(odd[i], odd[i + 1]);
    edges.emplace_back(odd[i], next);
    edges.emplace_back(next, odd[i + 1]);
    ++next;
  }
  a.graph = std::make_shared<const Graph>(next, std::move(edges));

  a.base_edge_map.reserve(static_cast<std::size_t>(base->size()));
  for (const Edge& e : base->edges()) a.base_edge_map.push_back(a.graph->edge_between(e.u, e.v));
  return a;
}

inline AugmentedGraph augment(const Graph& base) {
  return augment(std::make_shared<const Graph>(base));
}

// Hierholzer's algorithm from the lowest-index vertex with an edge, always
// leaving through the lowest-numbered unused neighbor.
inline EulerTour euler_tour(const Graph& g) {
  EulerTour tour;
  if (g.size() == 0) return tour;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " has odd degree; no closed Euler tour exists");
    }
  }
  Vertex start = 0;
  while (g.degree(start) == 0) ++start;

  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(g.order()), 0);
  // (vertex, edge that reached it); -1 for the start.
  std::vector<std::pair<Vertex, EdgeId>> stack{{start, -1}};
  std::vector<EdgeId> circuit;
  circuit.reserve(static_cast<std::size_t>(g.size()));
  while (!stack.empty()) {
    Vertex v = stack.back().first;
    auto list = g.incident(v);
    auto& c = cursor[static_cast<std::size_t>(v)];
    while (c < list.size() && used[static_cast<std::size_t>(list[c].edge)]) ++c;
    if (c < list.size()) {
      const Incidence& inc = list[c];
      used[static_cast<std::size_t>(inc.edge)] = 1;
      stack.emplace_back(inc.neighbor, inc.edge);
    } else {
      if (stack.back().second >= 0) circuit.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  if (circuit.size() != static_cast<std::size_t>(g.size())) {
    throw Error(ErrorCode::kDisconnected,
                "graph is disconnected: the tour from vertex " + std::to_string(start) + " covers " +
                    std::to_string(circuit.size()) + " of " + std::to_string(g.size()) + " edges");
  }
  tour.start = start;
  tour.edges.assign(circuit.rbegin(), circuit.rend());
  tour.walk.reserve(tour.edges.size() + 1);
  Vertex at = start;
  tour.walk.push_back(at);
  for (EdgeId e : tour.edges) {
    at = g.edge(e).other(at);
    tour.walk.push_back(at);
  }
  return tour;
}

inline EulerTour euler_tour(const AugmentedGraph& a) {
  if (!a.base->is_connected()) {
    throw Error(ErrorCode::kDisconnected, "base graph is disconnected; no Euler tour covers it");
  }
  return euler_tour(*a.graph);
}

struct BalancedConstruction {
  AugmentedGraph augmented;
  EulerTour tour;
  // Alternating labels on the augmented graph, first tour edge 0.
  EdgeLabeling augmented_labeling;
  // The same labels restricted to the base graph.
  EdgeLabeling labeling;
};

inline BalancedConstruction construct_strongly_balanced(std::shared_ptr<const Graph> g) {
  if (g->size() == 0) throw Error(ErrorCode::kEmptyGraph, "nothing to label: the graph has no edges");
  if (g->size() % 2 != 0) {
    throw Error(ErrorCode::kOddSize,
                "graph has " + std::to_string(g->size()) + " edges; an even number is required");
  }
  if (!g->is_connected()) throw Error(ErrorCode::kDisconnected, "graph must be connected");

  BalancedConstruction out;
  out.augmented = augment(g);
  out.tour = euler_tour(out.augmented);

  std::vector<std::uint8_t> aug_labels(static_cast<std::size_t>(out.augmented.graph->size()), 0);
  for (std::size_t i = 0; i < out.tour.edges.size(); ++i) {
    aug_labels[static_cast<std::size_t>(out.tour.edges[i])] = static_cast<std::uint8_t>(i % 2);
  }
  std::vector<std::uint8_t> base_labels;
  base_labels.reserve(static_cast<std::size_t>(g->size()));
  for (EdgeId aug_id : out.augmented.base_edge_map) {
    base_labels.push_back(aug_labels[static_cast<std::size_t>(aug_id)]);
  }
  out.augmented_labeling = EdgeLabeling(out.augmented.graph, std::move(aug_labels));
  out.labeling = EdgeLabeling(g, std::move(base_labels));
  return out;
}

inline EdgeLabeling build_strongly_balanced(std::shared_ptr<const Graph> g) {
  return construct_strongly_balanced(std::move(g)).labeling;
}

inline EdgeLabeling build_strongly_balanced(const Graph& g) {
  return build_strongly_balanced(std::make_shared<const Graph>(g));
}

}  // namespace oplabel
