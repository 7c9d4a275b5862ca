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

#include "comaxdim/comaximal.hpp"

#include <algorithm>

namespace comaxdim {
namespace {

template <typename AdjacentFn>
RingGraph make_ring_graph(const RingSpec& spec, std::vector<Ideal> ideals, AdjacentFn adjacent) {
  std::vector<std::string> labels;
  labels.reserve(ideals.size());
  for (const auto& ideal : ideals) labels.push_back(ideal.to_string());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < ideals.size(); ++u)
    for (Vertex v = u + 1; v < ideals.size(); ++v)
      if (adjacent(ideals[u], ideals[v])) edges.emplace_back(u, v);
  Graph graph(std::move(labels), edges);
  return RingGraph{spec, std::move(ideals), std::move(graph)};
}

bool incomparable_non_comaximal(const RingSpec& spec, const Ideal& a, const Ideal& b) {
  return !is_whole_ring(spec, ideal_sum(spec, a, b)) && !ideal_contains(spec, a, b) &&
         !ideal_contains(spec, b, a);
}

RingGraph drop_isolated(const RingGraph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.graph.order(); ++v) {
    if (g.graph.degree(v) > 0) keep.push_back(v);
  }
  std::vector<Ideal> ideals;
  ideals.reserve(keep.size());
  for (Vertex v : keep) ideals.push_back(g.ideals[v]);
  return RingGraph{g.spec, std::move(ideals), induced_subgraph(g.graph, keep)};
}

}  // namespace

std::size_t RingGraph::index_of(const Ideal& ideal) const {
  const auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal);
  return it != ideals.end() && *it == ideal ? static_cast<std::size_t>(it - ideals.begin()) : npos;
}

RingGraph build_gamma(const RingSpec& spec, const Limits& limits) {
  return make_ring_graph(spec, enumerate_vertices(spec, limits),
                         [&](const Ideal& a, const Ideal& b) { return is_comaximal(spec, a, b); });
}

RingGraph build_gamma_star_star(const RingSpec& spec, const Limits& limits) {
  return make_ring_graph(spec, enumerate_vertices(spec, limits), [&](const Ideal& a, const Ideal& b) {
    return incomparable_non_comaximal(spec, a, b);
  });
}

RingGraph build_gamma_star(const RingSpec& spec, const Limits& limits) {
  RingGraph gamma = build_gamma(spec, limits);
  if (gamma.graph.is_complete()) return gamma;
  return drop_isolated(build_gamma_star_star(spec, limits));
}

RingGraph build_gamma_prime(const RingSpec& spec, const Limits& limits) {
  return make_ring_graph(spec, enumerate_vertices(spec, limits), [&](const Ideal& a, const Ideal& b) {
    if (nil_class(spec, a) == nil_class(spec, b)) return true;
    return incomparable_non_comaximal(spec, prime_reduction(spec, a), prime_reduction(spec, b));
  });
}

DerivedGraphBundle build_all(const RingSpec& spec, const Limits& limits) {
  DerivedGraphBundle bundle{
      build_gamma(spec, limits),
      build_gamma_star_star(spec, limits),
      {spec, {}, {}},
      build_gamma_prime(spec, limits),
      spec.nonfield_count() > 0 && spec.field_count() > 0,
  };
  bundle.gamma_star = bundle.gamma.graph.is_complete() ? bundle.gamma : drop_isolated(bundle.gamma_star_star);
  return bundle;
}

std::vector<GraphComponent> decompose_components(const Graph& g) {
  std::vector<GraphComponent> out;
  for (auto& members : connected_components(g)) {
    bool clique = true;
    for (std::size_t i = 0; i < members.size() && clique; ++i) {
      clique = g.degree(members[i]) + 1 == members.size();
    }
    out.push_back({std::move(members), clique});
  }
  return out;
}

}  // namespace comaxdim
