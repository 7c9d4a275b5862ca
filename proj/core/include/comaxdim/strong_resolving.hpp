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

// Mutually maximally distant pairs, the boundary ∂(G) and the strong
// resolving graph G_SR of a connected graph.

#include <cstddef>
#include <vector>

#include "comaxdim/graph.hpp"

namespace comaxdim {

/// u is maximally distant from v when no neighbour of u is farther from v.
/// Requires a connected graph and u != v.
bool is_maximally_distant(const Graph& g, Vertex u, Vertex v);

bool is_mutually_maximally_distant(const Graph& g, Vertex u, Vertex v);

/// Vertices in at least one mutually maximally distant pair, ascending.
std::vector<Vertex> boundary(const Graph& g);

struct SrGraph {
  /// srg vertex i is base vertex boundary[i]; labels are inherited.
  std::vector<Vertex> boundary;
  Graph srg;
  /// Mutually maximally distant pairs in base indices, (u < v), sorted.
  std::vector<Edge> mmd_pairs;

  [[nodiscard]] std::vector<Vertex> to_base(const std::vector<Vertex>& srg_vertices) const;
};

/// Throws kDisconnected when g is not connected.
SrGraph build_srg(const Graph& g);

}  // namespace comaxdim
