// Copyright 2026 The comaxdim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "comaxdim/comaximal.hpp"
#include "comaxdim/errors.hpp"
#include "comaxdim/strong_resolving.hpp"
#include "oracles.hpp"

using namespace comaxdim;

namespace {

RingGraph gamma_of(std::vector<int> lengths) { return build_gamma(RingSpec::from_chain_lengths(lengths)); }

Vertex at(const RingGraph& g, std::vector<int> levels) { return g.index_of(Ideal{std::move(levels)}); }

}  // namespace

TEST(MaximallyDistant, DiametralPairs) {
  const auto p = Graph::path(5);
  EXPECT_TRUE(is_mutually_maximally_distant(p, 0, 4));
  EXPECT_FALSE(is_maximally_distant(p, 1, 4));
  EXPECT_TRUE(is_maximally_distant(p, 0, 2));
  EXPECT_FALSE(is_mutually_maximally_distant(p, 0, 2));
}

TEST(MaximallyDistant, ExampleFromThreeFields) {
  const auto g = gamma_of({1, 1, 1});
  EXPECT_FALSE(is_maximally_distant(g.graph, at(g, {1, 1, 0}), at(g, {0, 0, 1})));
  EXPECT_TRUE(is_mutually_maximally_distant(g.graph, at(g, {1, 0, 0}), at(g, {0, 1, 0})));
}

TEST(MaximallyDistant, TwinsAreMutual) {
  // 0 and 1 share their closed neighbourhood.
  const Graph g({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  EXPECT_TRUE(is_mutually_maximally_distant(g, 0, 1));
}

TEST(MaximallyDistant, Preconditions) {
  EXPECT_THROW((void)is_maximally_distant(Graph::path(3), 1, 1), Error);
  EXPECT_THROW((void)is_maximally_distant(Graph::edgeless(2), 0, 1), Error);
}

TEST(Boundary, Examples) {
  const auto g3 = gamma_of({1, 1, 1});
  EXPECT_EQ(boundary(g3.graph), (std::vector<Vertex>{at(g3, {0, 0, 1}), at(g3, {0, 1, 0}), at(g3, {1, 0, 0})}));
  const auto g4 = gamma_of({1, 1, 1, 1});
  const auto b4 = boundary(g4.graph);
  EXPECT_EQ(b4.size(), 10U);
  for (Vertex v : b4) EXPECT_FALSE(is_maximal(g4.spec, g4.ideals[v]));
  EXPECT_EQ(boundary(gamma_of({2, 2, 3}).graph).size(), 23U);
}

TEST(Srg, Examples) {
  for (std::size_t n : {2U, 3U, 6U}) {
    EXPECT_TRUE(build_srg(Graph::complete(n)).srg.same_structure(Graph::complete(n)));
  }
  const auto g3 = gamma_of({1, 1, 1});
  const auto s3 = build_srg(g3.graph);
  EXPECT_TRUE(s3.srg.same_structure(Graph::complete(3)));
  EXPECT_EQ(s3.srg.label(0), "(0,0,1)");
  EXPECT_EQ(s3.to_base({0, 2}), (std::vector<Vertex>{s3.boundary[0], s3.boundary[2]}));
  EXPECT_EQ(s3.mmd_pairs.size(), 3U);

  const auto s223 = build_srg(gamma_of({2, 2, 3}).graph);
  EXPECT_EQ(s223.srg.order(), 23U);
  EXPECT_EQ(s223.srg, build_gamma_prime(RingSpec::from_chain_lengths({2, 2, 3})).graph);
}

TEST(Srg, DisconnectedInput) { EXPECT_THROW((void)build_srg(Graph::edgeless(3)), Error); }

TEST(Srg, MatchesDefinitionOnRandomConnectedGraphs) {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 40) {
    const std::size_t n = 4 + checked % 9;
    std::bernoulli_distribution coin(0.35);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    const Graph g(std::vector<std::string>(n), edges);
    if (!g.is_connected()) continue;
    ++checked;
    const auto adj = oracle::adjacency_of(g);
    const auto d = oracle::floyd_warshall(adj);
    std::vector<Edge> expected;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (oracle::mmd(adj, d, u, v)) expected.emplace_back(u, v);
      }
    }
    const auto srg = build_srg(g);
    EXPECT_EQ(srg.mmd_pairs, expected);
    EXPECT_EQ(srg.srg.edge_count(), expected.size());
  }
}
