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

#pragma once

// Exact solvers: maximum independent set / minimum vertex cover, strong
// metric dimension through the strong resolving graph, and definitional
// brute-force oracles for strong metric dimension and metric dimension.

#include <cstddef>
#include <string_view>
#include <vector>

#include "comaxdim/graph.hpp"
#include "comaxdim/limits.hpp"
#include "comaxdim/strong_resolving.hpp"

namespace comaxdim {

struct CoverSolution {
  /// Vertex cover number.
  std::size_t alpha = 0;
  /// Independence number.
  std::size_t beta = 0;
  std::vector<Vertex> cover_witness;
  std::vector<Vertex> independent_witness;
};

/// Exact branch and bound: branch on a maximum-degree vertex (lowest index on
/// ties), include before exclude, prune with a greedy clique-cover bound.
/// Throws kCapExceeded when g.order() > limits.solve_cap.
CoverSolution max_independent_set(const Graph& g, const Limits& limits = {});

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& set);
bool is_independent_set(const Graph& g, const std::vector<Vertex>& set);

enum class SdimMethod { kSrgCover, kBruteForce };
std::string_view to_string(SdimMethod method);

struct SdimResult {
  std::size_t sdim = 0;
  /// A minimum strong resolving set, ascending vertex indices of the input graph.
  std::vector<Vertex> witness;
  SdimMethod method = SdimMethod::kSrgCover;
};

struct SrgSdim {
  SdimResult result;
  SrGraph srg;
  CoverSolution cover;
};

/// sdim(G) = vertex cover number of G_SR. Throws kDisconnected / kCapExceeded.
SdimResult sdim_via_srg(const Graph& g, const Limits& limits = {});
/// Same, keeping the intermediate strong resolving graph and cover.
SrgSdim sdim_via_srg_detailed(const Graph& g, const Limits& limits = {});

/// w strongly resolves {u, v} when u lies on a shortest w-v path or v on a
/// shortest w-u path. Endpoints count as on the path.
bool strongly_resolves(const Graph& g, Vertex w, Vertex u, Vertex v);

/// Every pair of distinct vertices is strongly resolved by some member.
/// Throws kDisconnected, or kInvalidArgument for vertices outside g.
bool is_strong_resolving_set(const Graph& g, const std::vector<Vertex>& set);

/// Smallest strong resolving set by increasing cardinality, lexicographic
/// order within a cardinality. Throws kCapExceeded past limits.brute_cap.
SdimResult sdim_bruteforce(const Graph& g, const Limits& limits = {});

/// Metric representations w.r.t. `set` are injective on V \ set.
bool is_resolving_set(const Graph& g, const std::vector<Vertex>& set);

struct MetricBasis {
  std::size_t dim = 0;
  std::vector<Vertex> basis;
};

/// Metric dimension by exhaustive search, same ordering as sdim_bruteforce.
MetricBasis metric_basis_bruteforce(const Graph& g, const Limits& limits = {});
std::size_t dim_bruteforce(const Graph& g, const Limits& limits = {});

}  // namespace comaxdim
