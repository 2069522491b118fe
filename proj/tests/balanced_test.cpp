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

#include "oplabel/balanced.hpp"

#include <set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace oplabel {
namespace {

using ::testing::ElementsAre;
using testing::share;

ErrorCode build_error(Graph g) {
  try {
    build_strongly_balanced(g);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an oplabel::Error";
  return ErrorCode::kInvariantViolation;
}

// Every edge once, consecutive edges share the walked vertex, and the walk closes.
void expect_valid_circuit(const Graph& g, const EulerTour& t) {
  ASSERT_EQ(static_cast<int>(t.edges.size()), g.size());
  ASSERT_EQ(t.walk.size(), t.edges.size() + 1);
  std::set<EdgeId> seen(t.edges.begin(), t.edges.end());
  EXPECT_EQ(static_cast<int>(seen.size()), g.size());
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const Edge& e = g.edge(t.edges[i]);
    ASSERT_TRUE(e.touches(t.walk[i]));
    ASSERT_EQ(e.other(t.walk[i]), t.walk[i + 1]);
  }
  EXPECT_EQ(t.walk.front(), t.walk.back());
  EXPECT_EQ(t.walk.front(), t.start);
}

void expect_strongly_balanced(const std::shared_ptr<const Graph>& g) {
  auto built = construct_strongly_balanced(g);
  const auto s = stats(built.labeling);
  EXPECT_EQ(s.e0, s.e1);
  EXPECT_TRUE(classify(s).strongly_edge_balanced) << s.v0 << ' ' << s.v1 << ' ' << s.unlabeled;
  EXPECT_EQ(&built.labeling.graph(), g.get());
  expect_valid_circuit(*built.augmented.graph, built.tour);
}

TEST(OddDegreeVertices, Examples) {
  EXPECT_THAT(odd_degree_vertices(make_family(Family::kCycle, 4)), ElementsAre());
  EXPECT_THAT(odd_degree_vertices(make_family(Family::kPath, 4)), ElementsAre(0, 3));
  EXPECT_THAT(odd_degree_vertices(make_complete(4)), ElementsAre(0, 1, 2, 3));
}

TEST(Augment, PairsConsecutiveOddVertices) {
  auto a = augment(make_complete(4));
  EXPECT_THAT(a.pairs, ElementsAre(std::pair<Vertex, Vertex>{0, 1}, std::pair<Vertex, Vertex>{2, 3}));
  EXPECT_THAT(a.aux_vertices, ElementsAre(4, 5));
  EXPECT_EQ(a.graph->order(), 6);
  EXPECT_EQ(a.graph->size(), 10);
  EXPECT_TRUE(odd_degree_vertices(*a.graph).empty());
  for (EdgeId id = 0; id < a.base->size(); ++id) {
    EXPECT_EQ(a.graph->edge(a.base_edge_map[static_cast<std::size_t>(id)]), a.base->edge(id));
  }

  auto p = augment(make_family(Family::kPath, 4));
  EXPECT_THAT(p.aux_vertices, ElementsAre(4));
  EXPECT_TRUE(p.graph->adjacent(0, 4));
  EXPECT_TRUE(p.graph->adjacent(3, 4));
}

TEST(EulerTour, LengthsOnAugmentedGraphs) {
  auto p3 = augment(make_family(Family::kPath, 3));
  auto t = euler_tour(p3);
  EXPECT_EQ(t.edges.size(), 4u);
  expect_valid_circuit(*p3.graph, t);

  auto k4 = augment(make_complete(4));
  EXPECT_EQ(euler_tour(k4).edges.size(), 10u);
  expect_valid_circuit(*k4.graph, euler_tour(k4));
}

TEST(EulerTour, RejectsOddDegreeAndDisconnected) {
  EXPECT_THROW(euler_tour(make_family(Family::kPath, 3)), Error);
  try {
    euler_tour(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

TEST(BuildStronglyBalanced, SmallGraphs) {
  expect_strongly_balanced(share(make_family(Family::kCycle, 4)));
  expect_strongly_balanced(share(make_family(Family::kCycle, 6)));
  expect_strongly_balanced(share(make_complete(5)));
  expect_strongly_balanced(share(make_complete(4)));
  expect_strongly_balanced(share(make_family(Family::kStar, 4)));
}

TEST(BuildStronglyBalanced, ErrorCodes) {
  EXPECT_EQ(build_error(make_complete(3)), ErrorCode::kOddSize);
  EXPECT_EQ(build_error(Graph(5, {{0, 1}, {2, 3}})), ErrorCode::kDisconnected);
  EXPECT_EQ(build_error(Graph(3, {})), ErrorCode::kEmptyGraph);
}

TEST(BuildStronglyBalanced, TourAlternatesAndAuxEdgesDisagree) {
  auto built = construct_strongly_balanced(share(make_complete(4)));
  const auto& aug = built.augmented_labeling;
  for (std::size_t i = 0; i < built.tour.edges.size(); ++i) {
    EXPECT_EQ(aug.label(built.tour.edges[i]), static_cast<int>(i % 2));
  }
  for (std::size_t i = 0; i < built.augmented.pairs.size(); ++i) {
    auto [a, b] = built.augmented.pairs[i];
    Vertex w = built.augmented.aux_vertices[i];
    EXPECT_NE(aug.label(a, w), aug.label(b, w));
  }
}

// Every connected even-size graph in a random corpus gets a strongly
// edge-balanced labeling, checked with recounted margins.
TEST(BalancedProperty, RandomConnectedEvenSize) {
  Prng rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    auto n = static_cast<Vertex>(3 + rng.below(10));
    auto g = share(random_connected_even_size(n, rng.unit(), rng));
    auto f = build_strongly_balanced(g);
    int e1 = 0;
    for (auto b : f.labels()) e1 += b;
    ASSERT_EQ(2 * e1, g->size());
    int v0 = 0;
    int v1 = 0;
    for (VertexValue v : testing::brute_values(f)) {
      v0 += v == VertexValue::kZero;
      v1 += v == VertexValue::kOne;
    }
    ASSERT_EQ(v0, v1) << "trial " << trial;
    for (Vertex v = 0; v < g->order(); ++v) {
      const bool unlabeled = testing::brute_value(f, v) == VertexValue::kUnlabeled;
      ASSERT_EQ(unlabeled, g->degree(v) % 2 == 0) << "trial " << trial << " vertex " << v;
    }
    ASSERT_TRUE(classify(f).strongly_edge_balanced);
  }
}

}  // namespace
}  // namespace oplabel
