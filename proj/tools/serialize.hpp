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

// JSON views of library results. Shapes are pinned by docs/schemas/*.json.

#pragma once

#include <string>

#include "json.hpp"
#include "oplabel/oplabel.hpp"

namespace oplabel::serialize {

using nlohmann::json;

inline json graph_summary(const Graph& g) {
  return {{"n", g.order()}, {"m", g.size()}, {"complete", g.is_complete()}};
}

// [[u, v, bit], ...] in edge order.
inline json labeled_edges(const EdgeLabeling& f) {
  json out = json::array();
  const Graph& g = f.graph();
  for (EdgeId id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    out.push_back({e.u, e.v, f.label(id)});
  }
  return out;
}

inline json stats(const LabelingStats& s) {
  return {{"e0", s.e0}, {"e1", s.e1}, {"v0", s.v0}, {"v1", s.v1}, {"unlabeled", s.unlabeled}};
}

inline json move(const Graph& g, const SwitchMove& m) {
  json flips = json::array();
  for (EdgeId id : m.flips) {
    const Edge& e = g.edge(id);
    flips.push_back({e.u, e.v});
  }
  return {{"step", m.annotation}, {"flips", std::move(flips)}};
}

inline json trace(const Graph& g, const std::vector<SwitchMove>& moves) {
  json out = json::array();
  for (const auto& m : moves) out.push_back(move(g, m));
  return out;
}

inline json opinionate_report(const OpinionateReport& r) {
  const Graph& g = r.final_labeling.graph();
  return {
      {"graph", graph_summary(g)},
      {"initial_unlabeled", r.initial_unlabeled},
      {"unlabeled_after", oplabel::stats(r.final_labeling).unlabeled},
      {"iterations", r.iterations},
      {"move_count", r.moves.size()},
      {"moves", trace(g, r.moves)},
      {"unlabeled_history", r.unlabeled_history},
      {"tripwires", r.tripwires},
      {"stats", stats(oplabel::stats(r.final_labeling))},
      {"labeling", labeled_edges(r.final_labeling)},
  };
}

inline json verification(const EdgeLabeling& f) {
  const auto s = oplabel::stats(f);
  const auto c = classify(s);
  json vertices = json::array();
  for (Vertex v = 0; v < f.graph().order(); ++v) {
    const auto st = vertex_status(f, v);
    vertices.push_back({{"vertex", v},
                        {"degree", f.graph().degree(v)},
                        {"value", std::string(to_string(st.value))},
                        {"margin", st.margin},
                        {"trusty", is_trusty(f, v)}});
  }
  return {{"graph", graph_summary(f.graph())},
          {"edge_friendly", c.edge_friendly},
          {"edge_balanced", c.edge_balanced},
          {"strongly_edge_balanced", c.strongly_edge_balanced},
          {"opinionated", c.opinionated},
          {"stats", stats(s)},
          {"vertices", std::move(vertices)}};
}

inline json spectrum_report(const SpectrumReport& r) {
  json witnesses = json::object();
  json histogram = json::object();
  for (const auto& [i, w] : r.witnesses) witnesses[std::to_string(i)] = labeled_edges(w);
  for (const auto& [i, count] : r.histogram) histogram[std::to_string(i)] = count;
  return {{"graph", r.graph_id},
          {"total", r.total_labelings},
          {"achievable", r.achievable},
          {"min_unlabeled", r.min_unlabeled},
          {"witnesses", std::move(witnesses)},
          {"histogram", std::move(histogram)}};
}

inline json bounds(int n) {
  const auto b = a1_zero_edge_lower_bound(n);
  const int a0 = (n - 1) / 2;
  return {{"n", n},
          {"a1_zero_edge_lower_bound",
           {{"value", b.value},
            {"residue_mod_4", b.residue},
            {"valid_from", b.valid_from},
            {"applicable", b.applicable},
            {"at_least_one", b.value >= 1},
            {"formula", b.formula}}},
          {"counting_threshold", {{"a0", a0}, {"a0_squared", a0 * a0}, {"two_a0", 2 * a0},
                                  {"holds", counting_threshold(a0)}}}};
}

inline json claims(const ClaimsReport& r) {
  json rows = json::array();
  for (const auto& c : r.claims) {
    rows.push_back({{"name", c.name}, {"expectation", c.expectation}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"all_passed", r.all_passed()}, {"claims", std::move(rows)}};
}

}  // namespace oplabel::serialize
