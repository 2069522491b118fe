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

// Text formats shared by every command.
//
//   graph:     p <n> <m>       one header, before any edge
//              e <u> <v>       m lines, 0-based endpoints
//   labeling:  l <u> <v> <b>   one line per edge of the graph, b in {0, 1}
//
// Tokens are whitespace-delimited and '#' starts a comment. A graph reader
// skips 'l' records and a labeling reader skips 'p'/'e' records, so a graph
// and its labeling may share one file.

#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "oplabel/error.hpp"
#include "oplabel/graph.hpp"
#include "oplabel/labeling.hpp"

namespace oplabel::io {

namespace detail {

struct Record {
  int line = 0;
  std::vector<std::string> tokens;
};

inline Error parse_error(int line, const std::string& what) {
  return Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

inline std::vector<Record> tokenize(std::istream& in) {
  std::vector<Record> records;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    std::istringstream fields(text);
    Record r{line, {}};
    for (std::string tok; fields >> tok;) r.tokens.push_back(std::move(tok));
    if (!r.tokens.empty()) records.push_back(std::move(r));
  }
  return records;
}

inline std::int64_t to_int(const Record& r, std::size_t index, std::string_view what) {
  const std::string& tok = r.tokens[index];
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw parse_error(r.line, "expected integer " + std::string(what) + ", got '" + tok + "'");
  }
  return value;
}

inline void expect_arity(const Record& r, std::size_t arity) {
  if (r.tokens.size() != arity) {
    throw parse_error(r.line, "'" + r.tokens[0] + "' record takes " + std::to_string(arity - 1) +
                                  " fields, got " + std::to_string(r.tokens.size() - 1));
  }
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  using detail::parse_error;
  auto records = detail::tokenize(in);
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  int header_line = 0;
  std::vector<Edge> edges;
  for (const auto& r : records) {
    const std::string& kind = r.tokens[0];
    if (kind == "p") {
      if (have_header) throw parse_error(r.line, "second 'p' header");
      detail::expect_arity(r, 3);
      n = detail::to_int(r, 1, "vertex count");
      m = detail::to_int(r, 2, "edge count");
      if (n < 0 || m < 0) throw parse_error(r.line, "counts must be non-negative");
      if (n > INT32_MAX) throw parse_error(r.line, "vertex count too large");
      have_header = true;
      header_line = r.line;
    } else if (kind == "e") {
      if (!have_header) throw parse_error(r.line, "'e' record before 'p' header");
      detail::expect_arity(r, 3);
      auto u = detail::to_int(r, 1, "endpoint");
      auto v = detail::to_int(r, 2, "endpoint");
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw parse_error(r.line, "endpoint out of range 0.." + std::to_string(n - 1));
      }
      if (u == v) throw parse_error(r.line, "loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else if (kind == "l") {
      continue;
    } else {
      throw parse_error(r.line, "unknown record type '" + kind + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::kParse, "missing 'p <n> <m>' header");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw parse_error(header_line, "header declares " + std::to_string(m) + " edges but " +
                                       std::to_string(edges.size()) + " were given");
  }
  try {
    return Graph(static_cast<Vertex>(n), std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

inline EdgeLabeling read_labeling(std::istream& in, std::shared_ptr<const Graph> graph) {
  using detail::parse_error;
  const Graph& g = *graph;
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(g.size()), 0);
  std::vector<int> defined_at(static_cast<std::size_t>(g.size()), 0);
  for (const auto& r : detail::tokenize(in)) {
    const std::string& kind = r.tokens[0];
    if (kind == "p" || kind == "e") continue;
    if (kind != "l") throw parse_error(r.line, "unknown record type '" + kind + "'");
    detail::expect_arity(r, 4);
    auto u = detail::to_int(r, 1, "endpoint");
    auto v = detail::to_int(r, 2, "endpoint");
    auto bit = detail::to_int(r, 3, "label");
    if (bit != 0 && bit != 1) throw parse_error(r.line, "label must be 0 or 1");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
      throw parse_error(r.line, "endpoint out of range for a graph on " + std::to_string(g.order()) +
                                    " vertices");
    }
    auto id = g.edge_id(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!id) {
      throw parse_error(r.line, "labels non-edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    auto& seen = defined_at[static_cast<std::size_t>(*id)];
    if (seen) {
      throw parse_error(r.line, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " already labeled on line " + std::to_string(seen));
    }
    seen = r.line;
    labels[static_cast<std::size_t>(*id)] = static_cast<std::uint8_t>(bit);
  }
  for (EdgeId id = 0; id < g.size(); ++id) {
    if (!defined_at[static_cast<std::size_t>(id)]) {
      const Edge& e = g.edge(id);
      throw Error(ErrorCode::kParse, "labeling is missing edge " + std::to_string(e.u) + "-" +
                                         std::to_string(e.v));
    }
  }
  return EdgeLabeling(std::move(graph), std::move(labels));
}

inline void write_graph(std::ostream& out, const Graph& g, std::string_view comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

inline void write_labeling(std::ostream& out, const EdgeLabeling& labeling,
                           std::string_view comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  const Graph& g = labeling.graph();
  for (EdgeId id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    out << "l " << e.u << ' ' << e.v << ' ' << labeling.label(id) << '\n';
  }
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

inline EdgeLabeling parse_labeling(std::string_view text, std::shared_ptr<const Graph> graph) {
  std::istringstream in{std::string(text)};
  return read_labeling(in, std::move(graph));
}

}  // namespace oplabel::io
