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

// Exhaustive enumeration of edge-friendly labelings and the spectrum of
// unlabeled-vertex counts they achieve.
//
// A labeling of an m-edge graph is packed into a 64-bit key with edge i at
// bit m-1-i, so comparing keys compares label sequences lexicographically.
// Edge-friendly labelings are exactly the keys of popcount ⌊m/2⌋ or ⌈m/2⌉;
// they are visited one popcount class at a time, each in increasing key
// order (Gosper's successor).

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "oplabel/error.hpp"
#include "oplabel/graph.hpp"
#include "oplabel/labeling.hpp"

namespace oplabel {

inline constexpr int kDefaultEnumerationCap = 24;
inline constexpr int kMaxEnumerationCap = 62;

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

// C(m, ⌊m/2⌋) + C(m, ⌈m/2⌉) when m is odd, else C(m, m/2).
inline std::uint64_t edge_friendly_count(int m) {
  return m % 2 == 0 ? binomial(m, m / 2) : 2 * binomial(m, m / 2);
}

inline std::vector<int> edge_friendly_popcounts(int m) {
  if (m % 2 == 0) return {m / 2};
  return {m / 2, m / 2 + 1};
}

// The rank-th k-subset of {0..63} in increasing key order (combinatorial
// number system).
inline std::uint64_t unrank_combination(int k, std::uint64_t rank) {
  std::uint64_t key = 0;
  int hi = 63;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 <= hi && binomial(c + 1, i) <= rank) ++c;
    key |= std::uint64_t{1} << c;
    rank -= binomial(c, i);
    hi = c - 1;
  }
  return key;
}

inline std::uint64_t next_combination(std::uint64_t key) {
  const std::uint64_t low = key & (~key + 1);
  const std::uint64_t ripple = key + low;
  return ripple | (((key ^ ripple) >> 2) / low);
}

inline void check_enumeration_cap(int m, int cap) {
  if (cap > kMaxEnumerationCap) {
    throw Error(ErrorCode::kInvalidArgument,
                "enumeration cap cannot exceed " + std::to_string(kMaxEnumerationCap));
  }
  if (m > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "graph has " + std::to_string(m) + " edges, above the enumeration cap of " +
                    std::to_string(cap) + "; raise it with --cap if the run time is acceptable");
  }
}

inline std::uint64_t key_of(const EdgeLabeling& labeling) {
  const int m = labeling.graph().size();
  std::uint64_t key = 0;
  for (EdgeId i = 0; i < m; ++i) {
    if (labeling.label(i)) key |= std::uint64_t{1} << (m - 1 - i);
  }
  return key;
}

inline EdgeLabeling labeling_of_key(std::shared_ptr<const Graph> graph, std::uint64_t key) {
  const int m = graph->size();
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = (key >> (m - 1 - i)) & 1;
  return EdgeLabeling(std::move(graph), std::move(labels));
}

// Calls visit(key) for each key of popcount k with rank in [first, last).
template <typename Visit>
void for_each_combination(int m, int k, std::uint64_t first, std::uint64_t last, Visit&& visit) {
  if (first >= last) return;
  if (k == 0) {
    visit(std::uint64_t{0});
    return;
  }
  (void)m;
  std::uint64_t key = unrank_combination(k, first);
  for (std::uint64_t r = first; r < last; ++r) {
    visit(key);
    if (r + 1 < last) key = next_combination(key);
  }
}

// Every edge-friendly key of an m-edge graph, each once.
template <typename Visit>
void for_each_edge_friendly_key(int m, int cap, Visit&& visit) {
  check_enumeration_cap(m, cap);
  for (int k : edge_friendly_popcounts(m)) for_each_combination(m, k, 0, binomial(m, k), visit);
}

// Every edge-friendly labeling of `graph`, as EdgeLabeling values.
template <typename Visit>
void enumerate_edge_friendly(const std::shared_ptr<const Graph>& graph, Visit&& visit,
                             int cap = kDefaultEnumerationCap) {
  for_each_edge_friendly_key(graph->size(), cap,
                             [&](std::uint64_t key) { visit(labeling_of_key(graph, key)); });
}

struct SpectrumReport {
  std::string graph_id;
  std::uint64_t total_labelings = 0;
  // Sorted ascending.
  std::vector<int> achievable;
  int min_unlabeled = -1;
  // Lexicographically least labeling for each achievable count.
  std::map<int, EdgeLabeling> witnesses;
  // Number of edge-friendly labelings with each unlabeled count.
  std::map<int, std::uint64_t> histogram;

  bool opinionated() const { return min_unlabeled == 0; }
  bool achieves(int i) const { return std::binary_search(achievable.begin(), achievable.end(), i); }
};

struct SpectrumOptions {
  int cap = kDefaultEnumerationCap;
  int workers = 1;
};

namespace detail {

struct PartialSpectrum {
  std::vector<std::uint64_t> count;
  std::vector<std::uint64_t> least_key;

  explicit PartialSpectrum(int n)
      : count(static_cast<std::size_t>(n) + 1, 0),
        least_key(static_cast<std::size_t>(n) + 1, std::numeric_limits<std::uint64_t>::max()) {}

  void merge(const PartialSpectrum& o) {
    for (std::size_t i = 0; i < count.size(); ++i) {
      count[i] += o.count[i];
      least_key[i] = std::min(least_key[i], o.least_key[i]);
    }
  }
};

}  // namespace detail

inline SpectrumReport spectrum(const std::shared_ptr<const Graph>& graph, SpectrumOptions options = {},
                               std::string graph_id = {}) {
  const Graph& g = *graph;
  const int m = g.size();
  const Vertex n = g.order();
  check_enumeration_cap(m, options.cap);

  std::vector<std::uint64_t> incident(static_cast<std::size_t>(n), 0);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (EdgeId i = 0; i < m; ++i) {
    const Edge& e = g.edge(i);
    const std::uint64_t bit = std::uint64_t{1} << (m - 1 - i);
    incident[static_cast<std::size_t>(e.u)] |= bit;
    incident[static_cast<std::size_t>(e.v)] |= bit;
  }
  for (Vertex v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);

  auto evaluate = [&](std::uint64_t key, detail::PartialSpectrum& acc) {
    int unlabeled = 0;
    for (std::size_t v = 0; v < incident.size(); ++v) {
      unlabeled += 2 * std::popcount(key & incident[v]) == degree[v];
    }
    auto i = static_cast<std::size_t>(unlabeled);
    ++acc.count[i];
    if (key < acc.least_key[i]) acc.least_key[i] = key;
  };

  detail::PartialSpectrum total(n);
  const int workers = std::max(1, options.workers);
  for (int k : edge_friendly_popcounts(m)) {
    const std::uint64_t size = binomial(m, k);
    if (workers == 1 || size < 4096) {
      for_each_combination(m, k, 0, size, [&](std::uint64_t key) { evaluate(key, total); });
      continue;
    }
    std::vector<detail::PartialSpectrum> parts(static_cast<std::size_t>(workers), detail::PartialSpectrum(n));
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (size + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t first = std::min(size, chunk * static_cast<std::uint64_t>(w));
      const std::uint64_t last = std::min(size, first + chunk);
      threads.emplace_back([&, w, first, last] {
        auto& acc = parts[static_cast<std::size_t>(w)];
        for_each_combination(m, k, first, last, [&](std::uint64_t key) { evaluate(key, acc); });
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& p : parts) total.merge(p);
  }

  SpectrumReport report;
  report.graph_id = graph_id.empty() ? "graph(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")"
                                     : std::move(graph_id);
  for (std::size_t i = 0; i < total.count.size(); ++i) {
    if (total.count[i] == 0) continue;
    const int count = static_cast<int>(i);
    report.total_labelings += total.count[i];
    report.achievable.push_back(count);
    report.histogram[count] = total.count[i];
    report.witnesses.emplace(count, labeling_of_key(graph, total.least_key[i]));
  }
  report.min_unlabeled = report.achievable.empty() ? -1 : report.achievable.front();
  return report;
}

inline SpectrumReport spectrum(const Graph& g, SpectrumOptions options = {}, std::string graph_id = {}) {
  return spectrum(std::make_shared<const Graph>(g), options, std::move(graph_id));
}

struct ClaimResult {
  std::string name;
  std::string expectation;
  bool passed = false;
  std::string detail;
};

struct ClaimsReport {
  std::vector<ClaimResult> claims;

  bool all_passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed; });
  }
};

using SpectrumFn = std::function<SpectrumReport(const std::shared_ptr<const Graph>&, const std::string&)>;

inline SpectrumFn default_spectrum_fn(SpectrumOptions options = {}) {
  return [options](const std::shared_ptr<const Graph>& g, const std::string& id) {
    return spectrum(g, options, id);
  };
}

inline std::string describe(const SpectrumReport& r) {
  std::string s = r.graph_id + ": total=" + std::to_string(r.total_labelings) + " achievable={";
  for (std::size_t i = 0; i < r.achievable.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.achievable[i]);
  }
  return s + "} min=" + std::to_string(r.min_unlabeled);
}

// Small-instance facts about which graphs are opinionated. Every claim also
// checks the enumeration total against the closed form.
inline ClaimsReport verify_claims(const SpectrumFn& spectrum_of = default_spectrum_fn()) {
  ClaimsReport out;
  auto run = [&](const std::string& id, Graph g, const std::string& expectation,
                 const std::function<bool(const SpectrumReport&)>& holds) {
    auto graph = std::make_shared<const Graph>(std::move(g));
    SpectrumReport r = spectrum_of(graph, id);
    const bool count_ok = r.total_labelings == edge_friendly_count(graph->size());
    ClaimResult c{id, expectation, count_ok && holds(r), describe(r)};
    if (!count_ok) c.detail += " (enumeration total differs from the binomial closed form)";
    out.claims.push_back(std::move(c));
  };
  auto not_opinionated = [](const SpectrumReport& r) { return !r.achieves(0) && !r.achievable.empty(); };

  run("K_3", make_complete(3), "every edge-friendly labeling leaves exactly 2 vertices unlabeled",
      [](const SpectrumReport& r) { return r.min_unlabeled == 2 && r.achievable == std::vector<int>{2}; });
  run("K_5", make_complete(5), "not opinionated", not_opinionated);
  for (Vertex n = 3; n <= 8; ++n) {
    run("C_" + std::to_string(n), make_family(Family::kCycle, n), "not opinionated", not_opinionated);
  }
  for (Vertex n = 3; n <= 8; ++n) {
    run("P_" + std::to_string(n), make_family(Family::kPath, n), "not opinionated", not_opinionated);
  }
  for (Vertex k = 1; k <= 4; ++k) {
    run("K_1," + std::to_string(2 * k), make_family(Family::kStar, 2 * k),
        "odd-order star, not opinionated", not_opinionated);
  }
  run("P_2", make_family(Family::kPath, 2),
      "opinionated (a single edge; the only path that is)",
      [](const SpectrumReport& r) { return r.achievable == std::vector<int>{0}; });
  for (Vertex n = 2; n <= 6; n += 2) {
    run("K_" + std::to_string(n), make_complete(n), "every edge-friendly labeling is opinionated",
        [](const SpectrumReport& r) { return r.achievable == std::vector<int>{0}; });
  }
  run("K_7", make_complete(7), "opinionated", [](const SpectrumReport& r) { return r.achieves(0); });
  return out;
}

}  // namespace oplabel
