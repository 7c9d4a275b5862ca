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

#include "comaxdim/graph.hpp"

#include <algorithm>
#include <deque>

#include "comaxdim/errors.hpp"

namespace comaxdim {
namespace {

std::vector<std::string> index_labels(std::size_t order) {
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  return labels;
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw Error(ErrorKind::kInvalidArgument,
                "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
  }
}

}  // namespace

std::string distance_to_string(DistanceMatrix::Distance d) {
  return d == DistanceMatrix::kInfinity ? std::string("inf") : std::to_string(d);
}

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)), rows_(labels_.size(), Bitset(labels_.size())) {
  const std::size_t n = labels_.size();
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::kInvalidArgument, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                   ") out of range for order " + std::to_string(n));
    }
    if (u == v) throw Error(ErrorKind::kInvalidArgument, "self-loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
  }
  for (const auto& row : rows_) edge_count_ += row.count();
  edge_count_ /= 2;
  distances_ = compute_distances(*this);
}

Graph Graph::edgeless(std::size_t order) { return Graph(index_labels(order), {}); }

Graph Graph::complete(std::size_t order) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  return Graph(index_labels(order), edges);
}

Graph Graph::path(std::size_t order) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < order; ++v) edges.emplace_back(v - 1, v);
  return Graph(index_labels(order), edges);
}

Graph Graph::cycle(std::size_t order) {
  if (order < 3) throw Error(ErrorKind::kInvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < order; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, order - 1);
  return Graph(index_labels(order), edges);
}

Graph Graph::complete_multipartite(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph(index_labels(part_of.size()), edges);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (auto v = rows_[u].find_next(u); v != Bitset::npos; v = rows_[u].find_next(v)) out.emplace_back(u, v);
  }
  return out;
}

bool Graph::is_connected() const noexcept {
  for (Vertex v = 1; v < order(); ++v) {
    if (distances_.at(0, v) == DistanceMatrix::kInfinity) return false;
  }
  return true;
}

bool Graph::is_complete() const noexcept {
  const std::size_t n = order();
  return edge_count_ == n * (n == 0 ? 0 : n - 1) / 2;
}

DistanceMatrix compute_distances(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<DistanceMatrix::Distance> entries(n * n, DistanceMatrix::kInfinity);
  std::deque<Vertex> queue;
  for (Vertex source = 0; source < n; ++source) {
    auto* row = entries.data() + source * n;
    row[source] = 0;
    queue.assign(1, source);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const Bitset& nbrs = g.neighbors(u);
      for (auto w = nbrs.find_first(); w != Bitset::npos; w = nbrs.find_next(w)) {
        if (row[w] == DistanceMatrix::kInfinity) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

DistanceMatrix::Distance diameter(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::kEmptyGraph, "diameter of the empty graph is undefined");
  DistanceMatrix::Distance best = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) best = std::max(best, g.distance(u, v));
  return best;
}

Neighborhood neighborhoods(const Graph& g, Vertex v) {
  require_vertex(g, v);
  Neighborhood out{g.neighbors(v), g.neighbors(v)};
  out.closed.set(v);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<Vertex> keep = vertices;
  std::sort(keep.begin(), keep.end());
  for (Vertex v : keep) require_vertex(g, v);
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw Error(ErrorKind::kInvalidArgument, "induced_subgraph: repeated vertex");
  }
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (Vertex v : keep) labels.push_back(g.label(v));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) edges.emplace_back(i, j);
  return Graph(std::move(labels), edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.labels(), edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> component;
    for (Vertex v = root; v < g.order(); ++v) {
      if (g.distance(root, v) != DistanceMatrix::kInfinity) {
        seen[v] = true;
        component.push_back(v);
      }
    }
    out.push_back(std::move(component));
  }
  return out;
}

std::vector<Vertex> to_vertices(const Bitset& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto v = set.find_first(); v != Bitset::npos; v = set.find_next(v)) out.push_back(v);
  return out;
}

Bitset to_bitset(std::size_t order, const std::vector<Vertex>& vertices) {
  Bitset out(order);
  for (Vertex v : vertices) {
    if (v >= order) {
      throw Error(ErrorKind::kInvalidArgument,
                  "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(order));
    }
    out.set(v);
  }
  return out;
}

}  // namespace comaxdim
