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

#include "comaxdim/theorems.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace comaxdim;

TEST(Properties, GammaIsConnectedWithDiameterAtMostThree) {
  for (const auto& s : corpus::ring_specs(200)) {
    const auto g = build_gamma(s);
    EXPECT_TRUE(g.graph.is_connected()) << s.chain_vector();
    EXPECT_LE(diameter(g.graph), 3U) << s.chain_vector();
  }
}

TEST(Properties, GallaiOnEverySolvedGraph) {
  for (const auto& g : corpus::graphs(200)) {
    const auto srg = build_srg(g.graph);
    const auto cover = max_independent_set(srg.srg);
    EXPECT_EQ(cover.alpha + cover.beta, srg.srg.order()) << g.name;
    const auto direct = max_independent_set(g.graph);
    EXPECT_EQ(direct.alpha + direct.beta, g.graph.order()) << g.name;
  }
}

TEST(Properties, DistanceTrichotomyOnReducedRings) {
  for (int n = 2; n <= 6; ++n) {
    const auto s = RingSpec::from_chain_lengths(std::vector<int>(n, 1));
    const auto g = build_gamma(s);
    for (Vertex u = 0; u < g.ideals.size(); ++u) {
      for (Vertex v = u + 1; v < g.ideals.size(); ++v) {
        const auto& a = g.ideals[u];
        const auto& b = g.ideals[v];
        const unsigned expected = is_comaximal(s, a, b) ? 1U : (is_zero(ideal_meet(s, a, b)) ? 3U : 2U);
        EXPECT_EQ(g.graph.distance(u, v), expected);
      }
    }
  }
}

TEST(Properties, SameClassVerticesAreOpenTwins) {
  for (const auto& s : corpus::ring_specs(200)) {
    if (s.is_reduced()) continue;
    const auto g = build_gamma(s);
    for (Vertex u = 0; u < g.ideals.size(); ++u) {
      for (Vertex v = u + 1; v < g.ideals.size(); ++v) {
        if (nil_class(s, g.ideals[u]) != nil_class(s, g.ideals[v])) continue;
        EXPECT_FALSE(g.graph.adjacent(u, v));
        EXPECT_EQ(g.graph.neighbors(u), g.graph.neighbors(v)) << s.chain_vector();
      }
    }
  }
}

TEST(Properties, MetricDimensionNeverExceedsStrongMetricDimension) {
  for (const auto& g : corpus::graphs(20)) {
    EXPECT_LE(dim_bruteforce(g.graph), sdim_via_srg(g.graph).sdim) << g.name;
  }
}

TEST(Properties, TwinsAppearInEveryMinimumWitness) {
  for (const auto& g : corpus::graphs(20)) {
    const auto witness = sdim_bruteforce(g.graph).witness;
    const auto in = [&](Vertex v) { return std::binary_search(witness.begin(), witness.end(), v); };
    for (Vertex u = 0; u < g.graph.order(); ++u) {
      for (Vertex v = u + 1; v < g.graph.order(); ++v) {
        const auto nu = neighborhoods(g.graph, u);
        const auto nv = neighborhoods(g.graph, v);
        if (nu.open == nv.open || nu.closed == nv.closed) EXPECT_TRUE(in(u) || in(v)) << g.name;
      }
    }
  }
}

TEST(Properties, DiametralPairsAreMutuallyMaximallyDistant) {
  for (const auto& g : corpus::graphs(60)) {
    const auto diam = diameter(g.graph);
    for (Vertex u = 0; u < g.graph.order(); ++u) {
      for (Vertex v = u + 1; v < g.graph.order(); ++v) {
        if (g.graph.distance(u, v) == diam) EXPECT_TRUE(is_mutually_maximally_distant(g.graph, u, v));
      }
    }
  }
}

TEST(Properties, VertexCountIdentity) {
  for (const auto& s : corpus::ring_specs(400)) {
    std::uint64_t all = 1;
    std::uint64_t radical = 1;
    for (int k : s.chain_lengths()) {
      all *= static_cast<std::uint64_t>(k + 1);
      radical *= static_cast<std::uint64_t>(k);
    }
    EXPECT_EQ(s.vertex_count(), all - radical - 1);
    EXPECT_EQ(enumerate_vertices(s).size(), s.vertex_count());
  }
}

TEST(Properties, SdimAgreesWithSubsetEnumerationOnSmallGraphs) {
  for (const auto& g : corpus::graphs(16)) {
    EXPECT_EQ(sdim_via_srg(g.graph).sdim, oracle::sdim(oracle::adjacency_of(g.graph))) << g.name;
  }
}
