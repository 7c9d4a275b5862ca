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

// Co-maximal ideal graph Γ(R) and the derived graphs Γ**, Γ*, Γ'.

#include <cstddef>
#include <vector>

#include "comaxdim/graph.hpp"
#include "comaxdim/limits.hpp"
#include "comaxdim/ring_model.hpp"

namespace comaxdim {

/// A graph whose vertex i is the ideal ideals[i]. Labels are ideals[i].to_string().
struct RingGraph {
  RingSpec spec;
  std::vector<Ideal> ideals;
  Graph graph;

  /// Index of `ideal` in this graph, or npos when absent.
  [[nodiscard]] std::size_t index_of(const Ideal& ideal) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Vertices: proper ideals outside J(R). Edges: I + J = R.
RingGraph build_gamma(const RingSpec& spec, const Limits& limits = {});

/// Same vertices as Γ. Edges: I + J != R and I, J incomparable.
RingGraph build_gamma_star_star(const RingSpec& spec, const Limits& limits = {});

/// Γ itself when Γ is complete, otherwise Γ** without its isolated vertices.
RingGraph build_gamma_star(const RingSpec& spec, const Limits& limits = {});

/// Same vertices as Γ. Edges: same nil class, or the prime reductions I', J'
/// satisfy I' + J' != R with I', J' incomparable. For specs containing field
/// components this is an extension by analogy of the all-non-field case.
RingGraph build_gamma_prime(const RingSpec& spec, const Limits& limits = {});

struct DerivedGraphBundle {
  RingGraph gamma;
  RingGraph gamma_star_star;
  RingGraph gamma_star;
  RingGraph gamma_prime;
  /// True when the spec mixes fields and non-fields, where Γ' is only defined
  /// by analogy.
  bool gamma_prime_by_analogy = false;
};

DerivedGraphBundle build_all(const RingSpec& spec, const Limits& limits = {});

struct GraphComponent {
  std::vector<Vertex> vertices;
  bool is_clique = false;
  [[nodiscard]] std::size_t size() const noexcept { return vertices.size(); }
};

/// Connected components ordered by smallest vertex, each flagged as clique or not.
std::vector<GraphComponent> decompose_components(const Graph& g);

}  // namespace comaxdim
