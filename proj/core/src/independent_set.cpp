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

#include <algorithm>

#include "comaxdim/errors.hpp"
#include "comaxdim/solver.hpp"

namespace comaxdim {
namespace {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g), current_(g.order()), best_(g.order()) {}

  Bitset run() {
    Bitset all(g_.order());
    all.set();
    expand(all);
    return best_;
  }

 private:
  // Greedy clique cover of `candidates`; its size bounds any independent set inside.
  std::size_t clique_cover_bound(const Bitset& candidates) const {
    Bitset rest = candidates;
    std::size_t cliques = 0;
    for (auto v = rest.find_first(); v != Bitset::npos; v = rest.find_first()) {
      rest.reset(v);
      Bitset extend = rest & g_.neighbors(v);
      for (auto w = extend.find_first(); w != Bitset::npos; w = extend.find_first()) {
        rest.reset(w);
        extend &= g_.neighbors(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void record() {
    if (current_size_ > best_size_) {
      best_size_ = current_size_;
      best_ = current_;
    }
  }

  void expand(const Bitset& candidates) {
    if (candidates.none()) {
      record();
      return;
    }
    if (current_size_ + clique_cover_bound(candidates) <= best_size_) return;

    Vertex pivot = Bitset::npos;
    std::size_t pivot_degree = 0;
    for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
      const std::size_t d = (g_.neighbors(v) & candidates).count();
      if (pivot == Bitset::npos || d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot_degree == 0) {
      const Bitset saved = current_;
      current_ |= candidates;
      current_size_ += candidates.count();
      record();
      current_size_ -= candidates.count();
      current_ = saved;
      return;
    }

    Bitset without_closed = candidates - g_.neighbors(pivot);
    without_closed.reset(pivot);
    current_.set(pivot);
    ++current_size_;
    expand(without_closed);
    --current_size_;
    current_.reset(pivot);

    Bitset without_pivot = candidates;
    without_pivot.reset(pivot);
    expand(without_pivot);
  }

  const Graph& g_;
  Bitset current_;
  std::size_t current_size_ = 0;
  Bitset best_;
  std::size_t best_size_ = 0;
};

}  // namespace

CoverSolution max_independent_set(const Graph& g, const Limits& limits) {
  if (g.order() > limits.solve_cap) {
    throw Error(ErrorKind::kCapExceeded, "independent set on " + std::to_string(g.order()) +
                                             " vertices exceeds solve cap " + std::to_string(limits.solve_cap));
  }
  const Bitset independent = IndependentSetSearch(g).run();
  Bitset cover = independent;
  cover.flip();

  CoverSolution out;
  out.independent_witness = to_vertices(independent);
  out.cover_witness = to_vertices(cover);
  out.beta = out.independent_witness.size();
  out.alpha = out.cover_witness.size();
  return out;
}

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& set) {
  const Bitset members = to_bitset(g.order(), set);
  for (const auto& [u, v] : g.edges()) {
    if (!members.test(u) && !members.test(v)) return false;
  }
  return true;
}

bool is_independent_set(const Graph& g, const std::vector<Vertex>& set) {
  const Bitset members = to_bitset(g.order(), set);
  for (auto v = members.find_first(); v != Bitset::npos; v = members.find_next(v)) {
    if (g.neighbors(v).intersects(members)) return false;
  }
  return true;
}

}  // namespace comaxdim
