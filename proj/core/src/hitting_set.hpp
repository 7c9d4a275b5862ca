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

#include <cstddef>
#include <optional>
#include <vector>

#include "comaxdim/graph.hpp"

namespace comaxdim::detail {

/// Smallest subset of {0..universe-1} meeting every constraint set, searched by
/// increasing cardinality and, within one cardinality, in lexicographic order
/// of ascending index lists. Returns nullopt when some constraint is empty.
///
/// Pruning never discards a feasible branch: a branch dies when a constraint
/// has no undecided member left, or when a lower bound from constraints with
/// at most two undecided members (a vertex-cover clique-partition bound)
/// exceeds the remaining budget.
std::optional<std::vector<Vertex>> min_hitting_set(std::size_t universe, const std::vector<Bitset>& constraints);

}  // namespace comaxdim::detail
