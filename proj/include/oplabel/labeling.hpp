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
#include <cstdlib>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oplabel/error.hpp"
#include "oplabel/graph.hpp"

#if !defined(OPLABEL_CHECK_MARGINS) && !defined(NDEBUG)
#define OPLABEL_CHECK_MARGINS 1
#endif

namespace oplabel {

// Induced vertex label: the majority label of the incident edges, or
// kUnlabeled on a tie.
enum class VertexValue : std::uint8_t { kZero, kOne, kUnlabeled };

constexpr std::string_view to_string(VertexValue v) {
  switch (v) {
    case VertexValue::kZero: return "0";
    case VertexValue::kOne: return "1";
    case VertexValue::kUnlabeled: return "unlabeled";
  }
  return "?";
}

constexpr VertexValue value_of_margin(int margin) {
  return margin > 0 ? VertexValue::kOne : margin < 0 ? VertexValue::kZero : VertexValue::kUnlabeled;
}

struct VertexStatus {
  VertexValue value = VertexValue::kUnlabeled;
  // |N_1(v)| - |N_0(v)|
  int margin = 0;

  friend bool operator==(const VertexStatus&, const VertexStatus&) = default;
};

struct EdgeCounts {
  int zeros = 0;
  int ones = 0;

  friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};

struct LabelingStats {
  int e0 = 0;
  int e1 = 0;
  int v0 = 0;
  int v1 = 0;
  int unlabeled = 0;

  friend bool operator==(const LabelingStats&, const LabelingStats&) = default;
};

struct Classification {
  bool edge_friendly = false;
  bool edge_balanced = false;
  bool strongly_edge_balanced = false;
  bool opinionated = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

// A set of edges whose labels are complemented together. Valid only when it
// flips as many 0-edges as 1-edges in the labeling it is applied to.
struct SwitchMove {
  std::vector<EdgeId> flips;
  std::string annotation;
};

// Total assignment of a bit to every edge of one graph, with per-vertex
// margins maintained incrementally. The graph is shared and immutable, so
// copies are cheap and independent.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;

  EdgeLabeling(std::shared_ptr<const Graph> graph, std::vector<std::uint8_t> labels)
      : graph_(std::move(graph)), labels_(std::move(labels)) {
    if (!graph_) throw Error(ErrorCode::kInvalidArgument, "labeling needs a graph");
    if (labels_.size() != static_cast<std::size_t>(graph_->size())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "labeling has " + std::to_string(labels_.size()) + " labels for " +
                      std::to_string(graph_->size()) + " edges");
    }
    for (auto bit : labels_) {
      if (bit > 1) throw Error(ErrorCode::kInvalidArgument, "edge labels must be 0 or 1");
    }
    margins_ = recompute_margins();
  }

  static EdgeLabeling all_zero(std::shared_ptr<const Graph> graph) {
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(graph->size()), 0);
    return EdgeLabeling(std::move(graph), std::move(labels));
  }

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }

  int label(EdgeId e) const { return labels_.at(static_cast<std::size_t>(e)); }
  int label(Vertex a, Vertex b) const { return label(graph_->edge_between(a, b)); }
  std::span<const std::uint8_t> labels() const { return labels_; }

  int margin(Vertex v) const { return margins_.at(static_cast<std::size_t>(v)); }

  // Sets one edge label outside the switch-move discipline; for constructors
  // and generators only.
  void set_label(EdgeId e, int bit) {
    if (bit != 0 && bit != 1) throw Error(ErrorCode::kInvalidArgument, "edge labels must be 0 or 1");
    if (label(e) != bit) flip_one(e);
  }

  // Complements every edge of `move` after checking the pairwise-switch
  // property. Applying the same move twice restores the labeling.
  void apply(const SwitchMove& move) {
    validate(move);
    for (EdgeId e : move.flips) flip_one(e);
#if OPLABEL_CHECK_MARGINS
    if (recompute_margins() != margins_) {
      throw invariant_violation("incremental margins diverged from recomputation");
    }
#endif
  }

  void validate(const SwitchMove& move) const {
    int zeros = 0;
    int ones = 0;
    std::vector<char> seen(labels_.size(), 0);
    for (EdgeId e : move.flips) {
      if (e < 0 || e >= graph_->size()) {
        throw Error(ErrorCode::kInvalidArgument, "switch move names a non-edge");
      }
      auto& mark = seen[static_cast<std::size_t>(e)];
      if (mark) throw Error(ErrorCode::kInvalidArgument, "switch move flips an edge twice");
      mark = 1;
      (label(e) == 0 ? zeros : ones)++;
    }
    if (zeros != ones) {
      throw Error(ErrorCode::kUnbalancedMove,
                  "switch move flips " + std::to_string(zeros) + " 0-edges but " +
                      std::to_string(ones) + " 1-edges");
    }
  }

  // FNV-1a over the label vector.
  std::uint64_t checksum() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto bit : labels_) {
      h ^= bit;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::vector<int> recompute_margins() const {
    std::vector<int> margins(static_cast<std::size_t>(graph_->order()), 0);
    for (EdgeId id = 0; id < graph_->size(); ++id) {
      const Edge& e = graph_->edge(id);
      int delta = labels_[static_cast<std::size_t>(id)] ? 1 : -1;
      margins[static_cast<std::size_t>(e.u)] += delta;
      margins[static_cast<std::size_t>(e.v)] += delta;
    }
    return margins;
  }

  friend bool operator==(const EdgeLabeling& a, const EdgeLabeling& b) {
    return (a.graph_ == b.graph_ || (a.graph_ && b.graph_ && *a.graph_ == *b.graph_)) &&
           a.labels_ == b.labels_;
  }

 private:
  void flip_one(EdgeId e) {
    auto& bit = labels_[static_cast<std::size_t>(e)];
    int delta = bit ? -2 : 2;
    bit ^= 1;
    const Edge& edge = graph_->edge(e);
    margins_[static_cast<std::size_t>(edge.u)] += delta;
    margins_[static_cast<std::size_t>(edge.v)] += delta;
  }

  std::shared_ptr<const Graph> graph_;
  std::vector<std::uint8_t> labels_;
  std::vector<int> margins_;
};

inline EdgeCounts edge_counts(const EdgeLabeling& labeling) {
  EdgeCounts counts;
  for (auto bit : labeling.labels()) (bit ? counts.ones : counts.zeros)++;
  return counts;
}

inline bool is_edge_friendly(const EdgeLabeling& labeling) {
  auto c = edge_counts(labeling);
  return std::abs(c.zeros - c.ones) <= 1;
}

inline VertexStatus vertex_status(const EdgeLabeling& labeling, Vertex v) {
  int m = labeling.margin(v);
  return {value_of_margin(m), m};
}

// A vertex is trusty when flipping any one incident edge keeps its induced
// label. A single flip moves the margin by 2, so this needs |margin| > 2;
// isolated vertices are trusty vacuously.
inline bool is_trusty(const EdgeLabeling& labeling, Vertex v) {
  if (labeling.graph().degree(v) == 0) return true;
  return std::abs(labeling.margin(v)) > 2;
}

inline LabelingStats stats(const EdgeLabeling& labeling) {
  LabelingStats s;
  auto c = edge_counts(labeling);
  s.e0 = c.zeros;
  s.e1 = c.ones;
  for (Vertex v = 0; v < labeling.graph().order(); ++v) {
    switch (vertex_status(labeling, v).value) {
      case VertexValue::kZero: ++s.v0; break;
      case VertexValue::kOne: ++s.v1; break;
      case VertexValue::kUnlabeled: ++s.unlabeled; break;
    }
  }
  return s;
}

// Vertex-side conditions are reported even when the labeling is not
// edge-friendly; edge_balanced and opinionated additionally require it.
inline Classification classify(const LabelingStats& s) {
  Classification c;
  c.edge_friendly = std::abs(s.e0 - s.e1) <= 1;
  c.edge_balanced = c.edge_friendly && std::abs(s.v0 - s.v1) <= 1;
  c.strongly_edge_balanced = s.v0 == s.v1 && s.e0 == s.e1;
  c.opinionated = c.edge_friendly && s.unlabeled == 0;
  return c;
}

inline Classification classify(const EdgeLabeling& labeling) { return classify(stats(labeling)); }

inline EdgeLabeling apply_move(EdgeLabeling labeling, const SwitchMove& move) {
  labeling.apply(move);
  return labeling;
}

inline std::vector<Vertex> unlabeled_vertices(const EdgeLabeling& labeling) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < labeling.graph().order(); ++v) {
    if (labeling.margin(v) == 0) out.push_back(v);
  }
  return out;
}

}  // namespace oplabel
