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

// Label switching on K_n, n odd and at least 7, that turns any edge-friendly
// labeling into one with no unlabeled vertex.
//
// P is the set of unlabeled vertices and H the complete graph induced on P.
// Each outer iteration runs the first applicable step:
//
//   step1  two disjoint H-edges with different labels: swap them; all four
//          endpoints become labeled.
//   step2  two incident H-edges xy, yz with different labels: swap them; x
//          and z become labeled.
//   step3  H is monochromatic with at least one edge: local surgery around
//          the least H-edge xy using 0-neighbors z of x and w of y.
//   step4  exactly one unlabeled vertex v: a two- or four-edge switch among
//          v's neighborhoods labels it.
//
// Every move flips as many 0-edges as 1-edges, so the edge counts never
// change. Witnesses are always the least candidates in ascending vertex
// order, which makes runs and traces reproducible.

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oplabel/error.hpp"
#include "oplabel/graph.hpp"
#include "oplabel/labeling.hpp"

namespace oplabel {

struct OpinionateOptions {
  // Committed-move budget; 0 selects 10 * n * n.
  std::int64_t max_moves = 0;
  // Recompute all statuses around every committed move and verify locality
  // and probe hygiene.
  bool check_invariants = true;
};

struct OpinionateReport {
  EdgeLabeling initial_labeling;
  EdgeLabeling final_labeling;
  std::vector<SwitchMove> moves;
  int iterations = 0;
  int initial_unlabeled = 0;
  // |P| after each outer iteration.
  std::vector<int> unlabeled_history;
  // Branches that should be unreachable but were taken anyway.
  std::vector<std::string> tripwires;
};

// Rejects anything outside the supported scope (odd complete, n >= 7, edge-friendly), each with its own code.
inline void check_opinionate_input(const EdgeLabeling& f) {
  const Graph& g = f.graph();
  if (!g.is_complete()) {
    throw Error(ErrorCode::kNotComplete, "opinionate works on complete graphs only");
  }
  const Vertex n = g.order();
  if (n % 2 == 0) {
    throw Error(ErrorCode::kEvenOrder,
                "K_" + std::to_string(n) +
                    " has odd vertex degrees; every edge-friendly labeling is already opinionated");
  }
  if (n < 7) {
    throw Error(ErrorCode::kExcludedOrder,
                "K_" + std::to_string(n) +
                    " is excluded: n = 3 and n = 5 admit no opinionated labeling (and n = 1 has no edges)");
  }
  if (!is_edge_friendly(f)) {
    auto c = edge_counts(f);
    throw Error(ErrorCode::kNotEdgeFriendly,
                "labeling is not edge-friendly (" + std::to_string(c.zeros) + " zeros, " +
                    std::to_string(c.ones) + " ones)");
  }
}

// Mutable algorithm state. The step methods are public so that each rule can
// be exercised on its own; opinionate() drives them in order.
class OpinionatorState {
 public:
  explicit OpinionatorState(EdgeLabeling f, OpinionateOptions options = {})
      : f_(std::move(f)), options_(options) {
    check_opinionate_input(f_);
    n_ = f_.graph().order();
    refresh_unlabeled();
  }

  const EdgeLabeling& labeling() const { return f_; }
  const std::vector<Vertex>& unlabeled() const { return p_; }
  const std::vector<SwitchMove>& trace() const { return trace_; }
  const std::vector<std::string>& tripwires() const { return tripwires_; }

  std::int64_t move_budget() const {
    return options_.max_moves > 0 ? options_.max_moves : 10LL * n_ * n_;
  }

  // Two vertex-disjoint H-edges with different labels.
  bool step1_independent_pair() {
    auto h = h_edges();
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = i + 1; j < h.size(); ++j) {
        const Edge& a = f_.graph().edge(h[i]);
        const Edge& b = f_.graph().edge(h[j]);
        if (a.disjoint_from(b) && f_.label(h[i]) != f_.label(h[j])) {
          commit({h[i], h[j]}, "step1");
          return true;
        }
      }
    }
    return false;
  }

  // Two H-edges sharing a vertex with different labels (a 3-path xyz).
  bool step2_incident_pair() {
    auto h = h_edges();
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = i + 1; j < h.size(); ++j) {
        const Edge& a = f_.graph().edge(h[i]);
        const Edge& b = f_.graph().edge(h[j]);
        if (!a.disjoint_from(b) && f_.label(h[i]) != f_.label(h[j])) {
          commit({h[i], h[j]}, "step2");
          return true;
        }
      }
    }
    return false;
  }

  // H monochromatic with p >= 2. Labels are read through a complement view
  // so that the H-edge xy always looks like a 1-edge; flips are physical.
  bool step3_monochromatic() {
    if (p_.size() < 2) return false;
    const Vertex x = p_[0];
    const Vertex y = p_[1];
    const EdgeId xy = e(x, y);
    view_ = f_.label(xy) == 1 ? 0 : 1;
    struct ViewReset {
      int& v;
      ~ViewReset() { v = 0; }
    } reset{view_};

    for (EdgeId id : h_edges()) {
      if (lab(id) != 1) throw invariant_violation("step 3 entered with a non-monochromatic H");
    }

    const auto z = least_neighbor(x, 0, {});
    if (!z) throw invariant_violation("no 0-neighbor z of x in step 3");
    const auto w = least_neighbor(y, 0, {*z});
    if (!w) throw invariant_violation("no 0-neighbor w of y distinct from z in step 3");

    if (trusty(*z) || margin(*z) == 0) {
      if (margin(*z) == 0) tripwires_.push_back("step3.a: z unlabeled");
      commit({e(x, *z), xy}, "step3.a.z");
      return true;
    }
    if (trusty(*w) || margin(*w) == 0) {
      if (margin(*w) == 0) tripwires_.push_back("step3.a: w unlabeled");
      commit({e(y, *w), xy}, "step3.a.w");
      return true;
    }

    // z and w are labeled and untrusty.
    std::optional<Vertex> u;
    for (Vertex c = 0; c < n_; ++c) {
      if (c != y && c != *z && lab(y, c) == 0 && lab(*z, c) == 1) {
        u = c;
        break;
      }
    }
    if (u) {
      const std::vector<EdgeId> cycle{xy, e(y, *u), e(*u, *z), e(*z, x)};
      if (p_.size() > 2) {
        // xy turns into a 0-edge inside a 1-colored H, so step 1 or 2 applies next.
        commit(cycle, "step3.case1.cycle");
        return true;
      }
      if (lab(y, *z) == 1) {
        commit({e(x, *z), e(y, *z)}, "step3.case1.single.yz1");
      } else {
        commit(cycle, "step3.case1.single.cycle");
        commit({e(x, *z), e(y, *z)}, "step3.case1.single.yz0");
      }
      return true;
    }

    // Case 2: N_0(y) and N_1(z) are disjoint.
    if (lab(*z, *w) != 0) throw invariant_violation("case 2 expects f(zw) = 0");
    const auto v = least_neighbor(*z, 1, {x, y, *w});
    if (!v) throw invariant_violation("no 1-neighbor v of z in step 3 case 2");
    if (lab(y, *v) != 1) throw invariant_violation("case 2 expects f(yv) = 1");

    if (trusty(*v)) {
      commit({e(*z, *v), e(x, *z)}, "step3.case2.v_trusty");
      return true;
    }

    const std::vector<EdgeId> cycle{e(y, *w), e(*w, *z), e(*z, *v), e(*v, y)};
    const VertexValue w_before = value(*w);
    const VertexValue v_before = value(*v);
    VertexValue w_after{};
    VertexValue v_after{};
    probe(cycle, [&] {
      w_after = value(*w);
      v_after = value(*v);
    });
    const bool w_changed = w_after != w_before;
    const bool v_changed = v_after != v_before;

    if (!w_changed && !v_changed) {
      // Both are now trusty; keep the cycle.
      commit(cycle, "step3.case2.bullet1.cycle");
      commit({xy, e(y, *v)}, "step3.case2.bullet1");
    } else if (!w_changed) {
      // f+(w) = 1 absorbs one more 1-edge.
      commit({xy, e(y, *w)}, "step3.case2.bullet2.w");
    } else if (!v_changed) {
      // f+(v) = 0 absorbs one more 0-edge; x gains a 1-edge instead.
      commit({e(x, *z), e(*z, *v)}, "step3.case2.bullet2.v");
    } else if (lab(*v, *w) == 1) {
      commit({e(y, *w), e(*w, *v), e(*v, *z), e(*z, x)}, "step3.case2.bullet3.vw1");
    } else {
      commit({e(y, *w), e(*w, *v), e(*w, *z), xy, e(y, *v), e(*v, *z)}, "step3.case2.bullet3.vw0");
    }
    return true;
  }

  // Exactly one unlabeled vertex v; A0 = N_0(v), A1 = N_1(v).
  bool step4_single() {
    if (p_.size() != 1) return false;
    const Vertex v = p_[0];
    std::vector<Vertex> a0;
    std::vector<Vertex> a1;
    for (const Incidence& inc : f_.graph().incident(v)) {
      (f_.label(inc.edge) ? a1 : a0).push_back(inc.neighbor);
    }

    // (i) a 1-edge u1u2 in A0 whose u1 survives losing a 1-edge.
    for (Vertex u1 : a0) {
      if (!(trusty(u1) || value(u1) == VertexValue::kZero)) continue;
      for (Vertex u2 : a0) {
        if (u2 != u1 && lab(u1, u2) == 1) {
          commit({e(v, u2), e(u1, u2)}, "step4.i");
          return true;
        }
      }
    }
    // (ii) mirror: a 0-edge v1v2 in A1 whose v1 survives gaining a 1-edge.
    for (Vertex v1 : a1) {
      if (!(trusty(v1) || value(v1) == VertexValue::kOne)) continue;
      for (Vertex v2 : a1) {
        if (v2 != v1 && lab(v1, v2) == 0) {
          commit({e(v, v2), e(v1, v2)}, "step4.ii");
          return true;
        }
      }
    }
    // (iii) a 1-edge in A0 and a 0-edge in A1, all four endpoints untrusty
    // with f+ = 1 on the A0 side and f+ = 0 on the A1 side.
    auto untrusty_with = [&](Vertex a, VertexValue val) { return !trusty(a) && value(a) == val; };
    for (Vertex u1 : a0) {
      for (Vertex u2 : a0) {
        if (u2 == u1 || lab(u1, u2) != 1 || !untrusty_with(u1, VertexValue::kOne) ||
            !untrusty_with(u2, VertexValue::kOne)) {
          continue;
        }
        for (Vertex v1 : a1) {
          for (Vertex v2 : a1) {
            if (v2 == v1 || lab(v1, v2) != 0 || !untrusty_with(v1, VertexValue::kZero) ||
                !untrusty_with(v2, VertexValue::kZero)) {
              continue;
            }
            commit({e(v, u1), e(v, v1)}, "step4.iii.a");
            commit({e(v, u2), e(u1, u2)}, "step4.iii.b");
            return true;
          }
        }
      }
    }
    // (iv) trusty u1 in A0 with a 0-edge into A1.
    for (Vertex u1 : a0) {
      if (!trusty(u1)) continue;
      for (Vertex v1 : a1) {
        if (lab(u1, v1) == 0) {
          commit({e(u1, v1), e(v, v1)}, "step4.iv");
          return true;
        }
      }
    }
    // (iv) mirrored: trusty v1 in A1 with a 1-edge into A0.
    for (Vertex v1 : a1) {
      if (!trusty(v1)) continue;
      for (Vertex u1 : a0) {
        if (lab(u1, v1) == 1) {
          commit({e(u1, v1), e(v, u1)}, "step4.iv.mirror");
          return true;
        }
      }
    }
    throw invariant_violation("no step 4 configuration applies to vertex " + std::to_string(v));
  }

  // One outer iteration; returns false once nothing is unlabeled.
  bool iterate() {
    if (p_.empty()) return false;
    if (step1_independent_pair() || step2_incident_pair()) return true;
    if (p_.size() >= 2) {
      if (!step3_monochromatic()) throw invariant_violation("step 3 made no move");
      return true;
    }
    return step4_single();
  }

 private:
  EdgeId e(Vertex a, Vertex b) const { return f_.graph().edge_between(a, b); }
  int lab(EdgeId id) const { return f_.label(id) ^ view_; }
  int lab(Vertex a, Vertex b) const { return lab(e(a, b)); }
  int margin(Vertex v) const { return view_ ? -f_.margin(v) : f_.margin(v); }
  VertexValue value(Vertex v) const { return value_of_margin(margin(v)); }
  bool trusty(Vertex v) const { return is_trusty(f_, v); }

  std::optional<Vertex> least_neighbor(Vertex a, int bit, std::initializer_list<Vertex> skip) const {
    for (const Incidence& inc : f_.graph().incident(a)) {
      if (lab(inc.edge) != bit) continue;
      if (std::find(skip.begin(), skip.end(), inc.neighbor) != skip.end()) continue;
      return inc.neighbor;
    }
    return std::nullopt;
  }

  // H-edges in ascending order.
  std::vector<EdgeId> h_edges() const {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < p_.size(); ++i) {
      for (std::size_t j = i + 1; j < p_.size(); ++j) out.push_back(e(p_[i], p_[j]));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void refresh_unlabeled() { p_ = unlabeled_vertices(f_); }

  void commit(std::vector<EdgeId> flips, std::string annotation) {
    if (static_cast<std::int64_t>(trace_.size()) >= move_budget()) {
      throw invariant_violation("move budget of " + std::to_string(move_budget()) + " exhausted");
    }
    SwitchMove move{std::move(flips), std::move(annotation)};
    std::vector<int> before;
    if (options_.check_invariants) before = f_.recompute_margins();
    f_.apply(move);
    if (options_.check_invariants) {
      auto after = f_.recompute_margins();
      std::vector<char> touched(static_cast<std::size_t>(n_), 0);
      for (EdgeId id : move.flips) {
        const Edge& ed = f_.graph().edge(id);
        touched[static_cast<std::size_t>(ed.u)] = 1;
        touched[static_cast<std::size_t>(ed.v)] = 1;
      }
      for (Vertex x = 0; x < n_; ++x) {
        if (!touched[static_cast<std::size_t>(x)] &&
            before[static_cast<std::size_t>(x)] != after[static_cast<std::size_t>(x)]) {
          throw invariant_violation("move " + move.annotation + " changed a vertex it does not touch");
        }
      }
      if (!is_edge_friendly(f_)) throw invariant_violation("move broke edge-friendliness");
    }
    trace_.push_back(std::move(move));
    refresh_unlabeled();
  }

  // Applies `flips`, runs `inspect`, and restores the labeling bit-exactly.
  template <typename Inspect>
  void probe(const std::vector<EdgeId>& flips, Inspect&& inspect) {
    const SwitchMove move{flips, "probe"};
    const auto checksum = f_.checksum();
    f_.apply(move);
    inspect();
    f_.apply(move);
    if (options_.check_invariants && f_.checksum() != checksum) {
      throw invariant_violation("probe did not restore the labeling");
    }
  }

  EdgeLabeling f_;
  OpinionateOptions options_;
  Vertex n_ = 0;
  std::vector<Vertex> p_;
  std::vector<SwitchMove> trace_;
  std::vector<std::string> tripwires_;
  int view_ = 0;
};

inline OpinionateReport opinionate(const EdgeLabeling& f, OpinionateOptions options = {}) {
  OpinionatorState state(f, options);
  OpinionateReport report;
  report.initial_labeling = f;
  report.initial_unlabeled = static_cast<int>(state.unlabeled().size());
  int previous = report.initial_unlabeled;
  while (state.iterate()) {
    ++report.iterations;
    const int now = static_cast<int>(state.unlabeled().size());
    if (now > previous) {
      throw invariant_violation("unlabeled count rose from " + std::to_string(previous) + " to " +
                                std::to_string(now));
    }
    previous = now;
    report.unlabeled_history.push_back(now);
  }
  report.final_labeling = state.labeling();
  report.moves = state.trace();
  report.tripwires = state.tripwires();
  if (!classify(report.final_labeling).opinionated) {
    throw invariant_violation("terminated without an opinionated labeling");
  }
  return report;
}

// Replays a trace from its starting labeling.
inline EdgeLabeling replay(EdgeLabeling f, const std::vector<SwitchMove>& moves) {
  for (const auto& m : moves) f.apply(m);
  return f;
}

}  // namespace oplabel
