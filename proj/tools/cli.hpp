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

// The `oplabel` command line. Kept in a header so tests can drive run()
// in-process with string streams.

#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oplabel/oplabel.hpp"
#include "serialize.hpp"

namespace oplabel::cli {

// Process exit codes; docs/exit_codes.md mirrors this table.
enum ExitCode : int {
  kOk = 0,
  kClaimFailed = 1,
  kUsage = 2,
  kInput = 3,
  kNotCompleteExit = 4,
  kNotEdgeFriendlyExit = 5,
  kExcludedOrderExit = 6,
  kInternal = 7,
  kUnbalanceable = 8,
  kCapExceededExit = 9,
  kBadArgument = 10,
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return kInput;
    case ErrorCode::kNotComplete: return kNotCompleteExit;
    case ErrorCode::kNotEdgeFriendly: return kNotEdgeFriendlyExit;
    case ErrorCode::kExcludedOrder: return kExcludedOrderExit;
    case ErrorCode::kInvariantViolation: return kInternal;
    case ErrorCode::kDisconnected:
    case ErrorCode::kOddSize:
    case ErrorCode::kEmptyGraph: return kUnbalanceable;
    case ErrorCode::kCapExceeded: return kCapExceededExit;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kEvenOrder:
    case ErrorCode::kUnbalancedMove: return kBadArgument;
  }
  return kInternal;
}

struct Hooks {
  // Replaces the oracle behind `claims`; tests use it to inject faults.
  SpectrumFn claims_spectrum;
};

namespace detail {

inline std::shared_ptr<const Graph> load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, path + ": cannot open graph file");
  try {
    return std::make_shared<const Graph>(io::read_graph(in));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

inline EdgeLabeling load_labeling(const std::string& path, std::shared_ptr<const Graph> graph) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, path + ": cannot open labeling file");
  try {
    return io::read_labeling(in, std::move(graph));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

// Writes to `path`, or to `fallback` when path is empty.
template <typename Emit>
void emit_to(const std::string& path, std::ostream& fallback, Emit&& emit) {
  if (path.empty()) {
    emit(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kParse, path + ": cannot open for writing");
  emit(file);
}

inline void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

}  // namespace detail

inline int claims_command(std::ostream& out, const SpectrumFn& spectrum_of, bool as_json) {
  const ClaimsReport report = verify_claims(spectrum_of);
  if (as_json) {
    detail::print_json(out, serialize::claims(report));
  } else {
    for (const auto& c : report.claims) {
      out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(8) << c.name << ' '
          << c.expectation << "  [" << c.detail << "]\n";
    }
    out << (report.all_passed() ? "all claims hold\n" : "some claims FAILED\n");
  }
  return report.all_passed() ? kOk : kClaimFailed;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const Hooks& hooks = {}) {
  CLI::App app{"Edge-friendly labelings: balanced construction, opinionated switching, exhaustive oracle"};
  app.require_subcommand(1);

  // gen
  std::string gen_kind;
  int gen_size = 0;
  double gen_p = 0.5;
  std::uint64_t seed = 1;
  bool with_labeling = false;
  std::string gen_out;
  std::string gen_labeling_out;
  auto* gen = app.add_subcommand("gen", "Generate a graph, optionally with a random edge-friendly labeling");
  gen->add_option("kind", gen_kind, "complete | cycle | path | star | random")
      ->required()
      ->check(CLI::IsMember({"complete", "cycle", "path", "star", "random"}));
  gen->add_option("size", gen_size, "vertex count (leaf count for star)")->required();
  gen->add_option("--p", gen_p, "edge density for random graphs")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "PRNG seed (mt19937_64)");
  gen->add_flag("--with-labeling", with_labeling, "also emit a uniform random edge-friendly labeling");
  gen->add_option("-o,--output", gen_out, "graph file (default: stdout)");
  gen->add_option("--labeling-out", gen_labeling_out,
                  "labeling file (default: appended to the graph output)");

  // balance
  std::string graph_path;
  std::string labeling_path;
  std::string balance_out;
  auto* balance = app.add_subcommand("balance", "Strongly edge-balanced labeling of a connected even-size graph");
  balance->add_option("graph", graph_path)->required();
  balance->add_option("-o,--output", balance_out, "labeling file (default: stdout)");

  // opinionate
  std::string trace_out;
  std::string final_out;
  std::int64_t max_moves = 0;
  auto* opin = app.add_subcommand("opinionate", "Switch an edge-friendly labeling of K_n until every vertex is labeled");
  opin->add_option("graph", graph_path)->required();
  opin->add_option("labeling", labeling_path)->required();
  opin->add_option("--trace", trace_out, "write the move trace as JSON");
  opin->add_option("--labeling-out", final_out, "write the final labeling file");
  opin->add_option("--max-moves", max_moves, "move budget (default 10*n^2)");

  // verify
  auto* verify = app.add_subcommand("verify", "Classify a labeling");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("labeling", labeling_path)->required();

  // spectrum
  int cap = kDefaultEnumerationCap;
  int workers = 1;
  auto* spec = app.add_subcommand("spectrum", "Unlabeled-vertex counts over all edge-friendly labelings");
  spec->add_option("graph", graph_path)->required();
  spec->add_option("--cap", cap, "maximum edge count to enumerate")->check(CLI::Range(0, kMaxEnumerationCap));
  spec->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));

  // bounds
  int bound_n = 0;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the A1 zero-edge lower bound and the counting threshold");
  bounds->add_option("--n", bound_n, "odd order n >= 7")->required();

  // claims
  bool claims_json = false;
  auto* claims = app.add_subcommand("claims", "Check small-instance opinionatedness facts against the oracle");
  claims->add_flag("--json", claims_json, "emit JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      Prng rng(seed);
      std::shared_ptr<const Graph> graph;
      if (gen_kind == "complete") {
        graph = std::make_shared<const Graph>(make_complete(gen_size));
      } else if (gen_kind == "cycle") {
        graph = std::make_shared<const Graph>(make_family(Family::kCycle, gen_size));
      } else if (gen_kind == "path") {
        graph = std::make_shared<const Graph>(make_family(Family::kPath, gen_size));
      } else if (gen_kind == "star") {
        graph = std::make_shared<const Graph>(make_family(Family::kStar, gen_size));
      } else {
        graph = std::make_shared<const Graph>(random_gnp(gen_size, gen_p, rng));
      }
      std::ostringstream header;
      header << "oplabel gen " << gen_kind << ' ' << gen_size;
      if (gen_kind == "random") header << " p=" << gen_p;
      header << " seed=" << seed << " prng=" << Prng::kAlgorithm;
      std::ostringstream graph_text;
      io::write_graph(graph_text, *graph, header.str());
      std::string labeling_text;
      if (with_labeling) {
        std::ostringstream lt;
        io::write_labeling(lt, random_edge_friendly(graph, rng),
                           "uniform edge-friendly labeling seed=" + std::to_string(seed) + " prng=" +
                               std::string(Prng::kAlgorithm));
        labeling_text = lt.str();
      }
      if (!gen_labeling_out.empty() || gen_out.empty()) {
        detail::emit_to(gen_out, out, [&](std::ostream& o) {
          o << graph_text.str();
          if (gen_labeling_out.empty()) o << labeling_text;
        });
        if (with_labeling && !gen_labeling_out.empty()) {
          detail::emit_to(gen_labeling_out, out, [&](std::ostream& o) { o << labeling_text; });
        }
      } else {
        detail::emit_to(gen_out, out, [&](std::ostream& o) { o << graph_text.str() << labeling_text; });
      }
      return kOk;
    }

    if (*balance) {
      auto graph = detail::load_graph(graph_path);
      const EdgeLabeling f = build_strongly_balanced(graph);
      const auto s = stats(f);
      detail::emit_to(balance_out, out, [&](std::ostream& o) {
        io::write_labeling(o, f,
                           "strongly edge-balanced: e0=" + std::to_string(s.e0) + " e1=" + std::to_string(s.e1) +
                               " v0=" + std::to_string(s.v0) + " v1=" + std::to_string(s.v1) +
                               " unlabeled=" + std::to_string(s.unlabeled));
      });
      return kOk;
    }

    if (*opin) {
      auto graph = detail::load_graph(graph_path);
      const EdgeLabeling f = detail::load_labeling(labeling_path, graph);
      OpinionateReport report;
      try {
        report = opinionate(f, OpinionateOptions{max_moves, true});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEvenOrder) throw;
        // Odd degrees rule out ties, so an edge-friendly input is already done.
        if (!is_edge_friendly(f)) throw Error(ErrorCode::kNotEdgeFriendly, "labeling is not edge-friendly");
        report.initial_labeling = f;
        report.final_labeling = f;
      }
      if (!trace_out.empty()) {
        detail::emit_to(trace_out, out, [&](std::ostream& o) {
          detail::print_json(o, serialize::trace(*graph, report.moves));
        });
      }
      if (!final_out.empty()) {
        detail::emit_to(final_out, out, [&](std::ostream& o) { io::write_labeling(o, report.final_labeling); });
      }
      detail::print_json(out, serialize::opinionate_report(report));
      return kOk;
    }

    if (*verify) {
      auto graph = detail::load_graph(graph_path);
      detail::print_json(out, serialize::verification(detail::load_labeling(labeling_path, graph)));
      return kOk;
    }

    if (*spec) {
      auto graph = detail::load_graph(graph_path);
      detail::print_json(out, serialize::spectrum_report(spectrum(graph, {cap, workers}, graph_path)));
      return kOk;
    }

    if (*bounds) {
      detail::print_json(out, serialize::bounds(bound_n));
      return kOk;
    }

    if (*claims) {
      return claims_command(out, hooks.claims_spectrum ? hooks.claims_spectrum : default_spectrum_fn(),
                            claims_json);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace oplabel::cli
