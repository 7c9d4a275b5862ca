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
#include "comaxdim/solver.hpp"
#include "oracles.hpp"

using namespace comaxdim;

namespace {

RingGraph gamma_of(std::vector<int> lengths) { return build_gamma(RingSpec::from_chain_lengths(lengths)); }

std::vector<Vertex> ids(const RingGraph& g, const std::vector<std::vector<int>>& levels) {
  std::vector<Vertex> out;
  for (const auto& l : levels) out.push_back(g.index_of(Ideal{l}));
  std::sort(out.begin(), out.end());
  return out;
}

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(std::vector<std::string>(n), edges);
}

}  // namespace

TEST(IndependentSet, CompleteGraphs) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto sol = max_independent_set(Graph::complete(n));
    EXPECT_EQ(sol.beta, 1U);
    EXPECT_EQ(sol.alpha, n - 1);
  }
  const auto empty = max_independent_set(Graph());
  EXPECT_EQ(empty.alpha + empty.beta, 0U);
}

TEST(IndependentSet, SrgBetaValues) {
  for (int n = 3; n <= 6; ++n) {
    const auto srg = build_srg(gamma_of(std::vector<int>(n, 1)).graph);
    EXPECT_EQ(max_independent_set(srg.srg).beta, static_cast<std::size_t>(n - 2));
  }
  EXPECT_EQ(max_independent_set(build_srg(gamma_of({2, 2, 3}).graph).srg).beta, 4U);
}

TEST(IndependentSet, MatchesSubsetEnumerationAndWitnessesAreValid) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(1 + trial % 18, 0.1 + 0.1 * (trial % 7), rng);
    const auto sol = max_independent_set(g);
    EXPECT_EQ(sol.beta, oracle::independence_number(oracle::adjacency_of(g)));
    EXPECT_EQ(sol.alpha + sol.beta, g.order());
    EXPECT_EQ(sol.independent_witness.size(), sol.beta);
    EXPECT_EQ(sol.cover_witness.size(), sol.alpha);
    EXPECT_TRUE(is_independent_set(g, sol.independent_witness));
    EXPECT_TRUE(is_vertex_cover(g, sol.cover_witness));
  }
}

TEST(IndependentSet, SolveCap) {
  Limits limits;
  limits.solve_cap = 4;
  EXPECT_THROW((void)max_independent_set(Graph::path(5), limits), Error);
}

TEST(SdimViaSrg, Examples) {
  EXPECT_EQ(sdim_via_srg(Graph::complete(5)).sdim, 4U);
  EXPECT_EQ(sdim_via_srg(gamma_of({1, 1, 1}).graph).sdim, 2U);
  EXPECT_EQ(sdim_via_srg(gamma_of({2, 2, 3}).graph).sdim, 19U);
  const auto r = sdim_via_srg(gamma_of({2, 1}).graph);
  EXPECT_EQ(r.sdim, 1U);
  EXPECT_EQ(r.method, SdimMethod::kSrgCover);
  EXPECT_EQ(to_string(r.method), "srg_cover");
}

TEST(StrongResolving, Examples) {
  const auto g = gamma_of({1, 1, 1});
  std::vector<Vertex> all(g.graph.order());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_TRUE(is_strong_resolving_set(g.graph, all));
  EXPECT_TRUE(is_strong_resolving_set(g.graph, ids(g, {{1, 0, 0}, {0, 1, 0}})));
  EXPECT_FALSE(is_strong_resolving_set(g.graph, ids(g, {{1, 1, 0}})));
}

TEST(SdimBruteforce, Examples) {
  EXPECT_EQ(sdim_bruteforce(Graph::complete(4)).sdim, 3U);
  EXPECT_EQ(sdim_bruteforce(gamma_of({1, 1, 1}).graph).sdim, 2U);
  const auto p3 = sdim_bruteforce(gamma_of({2, 1}).graph);
  EXPECT_EQ(p3.sdim, 1U);
  EXPECT_EQ(p3.method, SdimMethod::kBruteForce);
  EXPECT_EQ(sdim_bruteforce(Graph::cycle(4)).sdim, 2U);
}

TEST(SdimBruteforce, Guards) {
  Limits limits;
  limits.brute_cap = 5;
  EXPECT_THROW((void)sdim_bruteforce(Graph::path(6), limits), Error);
  EXPECT_THROW((void)sdim_bruteforce(Graph::edgeless(3)), Error);
}

TEST(SdimBruteforce, AgreesWithSubsetEnumeration) {
  std::mt19937 rng(23);
  int checked = 0;
  while (checked < 40) {
    const auto g = random_graph(3 + checked % 12, 0.3, rng);
    if (!g.is_connected()) continue;
    ++checked;
    const auto r = sdim_bruteforce(g);
    EXPECT_EQ(r.sdim, oracle::sdim(oracle::adjacency_of(g)));
    EXPECT_EQ(r.witness.size(), r.sdim);
    EXPECT_TRUE(is_strong_resolving_set(g, r.witness));
  }
}

TEST(Resolving, Examples) {
  const auto k3 = Graph::complete(3);
  EXPECT_TRUE(is_resolving_set(k3, {0, 1}));
  EXPECT_FALSE(is_resolving_set(k3, {0}));
  const auto g = gamma_of({1, 1, 1});
  EXPECT_TRUE(is_resolving_set(g.graph, ids(g, {{1, 0, 0}, {0, 1, 0}})));
}

TEST(Dim, Examples) {
  for (std::size_t n = 2; n <= 7; ++n) EXPECT_EQ(dim_bruteforce(Graph::complete(n)), n - 1);
  EXPECT_EQ(dim_bruteforce(Graph::path(3)), 1U);
  const auto g = gamma_of({1, 1, 1});
  EXPECT_LE(dim_bruteforce(g.graph), 2U);
  EXPECT_EQ(dim_bruteforce(g.graph), oracle::dim(oracle::adjacency_of(g.graph)));
  const auto basis = metric_basis_bruteforce(g.graph);
  EXPECT_TRUE(is_resolving_set(g.graph, basis.basis));
}

TEST(Dim, AgreesWithSubsetEnumeration) {
  std::mt19937 rng(29);
  int checked = 0;
  while (checked < 30) {
    const auto g = random_graph(3 + checked % 11, 0.35, rng);
    if (!g.is_connected()) continue;
    ++checked;
    EXPECT_EQ(dim_bruteforce(g), oracle::dim(oracle::adjacency_of(g)));
  }
}
