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

// Immutable simple undirected graphs with bit-matrix adjacency and an
// all-pairs distance matrix computed at construction.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace comaxdim {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Unweighted shortest-path lengths. Unreachable pairs hold kInfinity.
class DistanceMatrix {
 public:
  using Distance = std::uint32_t;
  static constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

  DistanceMatrix() = default;
  DistanceMatrix(std::size_t order, std::vector<Distance> entries)
      : order_(order), entries_(std::move(entries)) {}

  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] Distance at(Vertex u, Vertex v) const { return entries_[u * order_ + v]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Distance> entries_;
};

/// "inf" for kInfinity, the decimal value otherwise.
std::string distance_to_string(DistanceMatrix::Distance d);

class Graph {
 public:
  Graph() = default;

  /// Labels may be empty strings; vertex identity is the index.
  /// Throws kInvalidArgument on self-loops or out-of-range endpoints.
  Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

  /// Edgeless graph on `order` vertices labelled "0", "1", ...
  static Graph edgeless(std::size_t order);
  static Graph complete(std::size_t order);
  static Graph path(std::size_t order);
  static Graph cycle(std::size_t order);
  static Graph complete_multipartite(const std::vector<std::size_t>& parts);

  [[nodiscard]] std::size_t order() const noexcept { return labels_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).test(v); }
  [[nodiscard]] const Bitset& neighbors(Vertex v) const { return rows_.at(v); }
  [[nodiscard]] std::size_t degree(Vertex v) const { return rows_.at(v).count(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::string& label(Vertex v) const { return labels_.at(v); }

  /// Sorted (i < j) edge list.
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] const DistanceMatrix& distances() const noexcept { return distances_; }
  [[nodiscard]] DistanceMatrix::Distance distance(Vertex u, Vertex v) const { return distances_.at(u, v); }
  [[nodiscard]] bool is_connected() const noexcept;
  [[nodiscard]] bool is_complete() const noexcept;

  /// Same order, same edges. Labels are metadata and are not compared.
  [[nodiscard]] bool same_structure(const Graph& other) const noexcept { return rows_ == other.rows_; }
  /// Same structure and same labels.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
  DistanceMatrix distances_;
};

/// Repeated BFS; same values as Graph::distances() but computed afresh.
DistanceMatrix compute_distances(const Graph& g);

/// Largest finite distance; kInfinity when disconnected; 0 for K1.
/// Throws kEmptyGraph on the empty graph.
DistanceMatrix::Distance diameter(const Graph& g);

struct Neighborhood {
  Bitset open;
  Bitset closed;
};
/// N(v) and N[v]. Throws kInvalidArgument for an unknown vertex.
Neighborhood neighborhoods(const Graph& g, Vertex v);

/// Subgraph induced by `vertices`, relabelled 0..|s|-1 in increasing
/// original index. Throws kInvalidArgument on unknown or repeated vertices.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

Graph complement(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

std::vector<Vertex> to_vertices(const Bitset& set);
Bitset to_bitset(std::size_t order, const std::vector<Vertex>& vertices);

// ---------------------------------------------------------------------------
// Interchange formats.

enum class GraphFormat { kDot, kGraph6, kJson };

/// "dot", "graph6" (or "g6"), "json". Throws kUnsupportedFormat.
GraphFormat parse_graph_format(std::string_view name);
std::string_view to_string(GraphFormat format);

/// Deterministic serialization. Labels survive dot and json, not graph6.
std::string export_graph(const Graph& g, GraphFormat format);

/// Accepts the short (n <= 62) and long forms; one graph, trailing newline ok.
Graph import_graph6(std::string_view text);
/// `{"vertices":[...],"edges":[[i,j],...]}`. Vertices may be strings or numbers.
Graph import_json(std::string_view text);

}  // namespace comaxdim
