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

#include "comaxdim/strong_resolving.hpp"

#include "comaxdim/errors.hpp"

namespace comaxdim {
namespace {

void require_connected(const Graph& g) {
  if (!g.is_connected()) {
    throw Error(ErrorKind::kDisconnected, "maximal distance needs a connected graph");
  }
}

bool maximally_distant_unchecked(const Graph& g, Vertex u, Vertex v) {
  const auto duv = g.distance(u, v);
  const Bitset& nbrs = g.neighbors(u);
  for (auto w = nbrs.find_first(); w != Bitset::npos; w = nbrs.find_next(w)) {
    if (g.distance(v, w) > duv) return false;
  }
  return true;
}

std::vector<Edge> mmd_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (maximally_distant_unchecked(g, u, v) && maximally_distant_unchecked(g, v, u)) out.emplace_back(u, v);
  return out;
}

}  // namespace

bool is_maximally_distant(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw Error(ErrorKind::kInvalidArgument, "unknown vertex");
  if (u == v) throw Error(ErrorKind::kInvalidArgument, "maximal distance needs two distinct vertices");
  require_connected(g);
  return maximally_distant_unchecked(g, u, v);
}

bool is_mutually_maximally_distant(const Graph& g, Vertex u, Vertex v) {
  return is_maximally_distant(g, u, v) && is_maximally_distant(g, v, u);
}

std::vector<Vertex> boundary(const Graph& g) {
  require_connected(g);
  Bitset members(g.order());
  for (const auto& [u, v] : mmd_pairs(g)) {
    members.set(u);
    members.set(v);
  }
  return to_vertices(members);
}

std::vector<Vertex> SrGraph::to_base(const std::vector<Vertex>& srg_vertices) const {
  std::vector<Vertex> out;
  out.reserve(srg_vertices.size());
  for (Vertex v : srg_vertices) out.push_back(boundary.at(v));
  return out;
}

SrGraph build_srg(const Graph& g) {
  require_connected(g);
  SrGraph out;
  out.mmd_pairs = mmd_pairs(g);
  Bitset members(g.order());
  for (const auto& [u, v] : out.mmd_pairs) {
    members.set(u);
    members.set(v);
  }
  out.boundary = to_vertices(members);

  std::vector<std::size_t> position(g.order(), 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.boundary.size(); ++i) {
    position[out.boundary[i]] = i;
    labels.push_back(g.label(out.boundary[i]));
  }
  std::vector<Edge> edges;
  edges.reserve(out.mmd_pairs.size());
  for (const auto& [u, v] : out.mmd_pairs) edges.emplace_back(position[u], position[v]);
  out.srg = Graph(std::move(labels), edges);
  return out;
}

}  // namespace comaxdim
