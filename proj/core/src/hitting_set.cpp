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

#include "hitting_set.hpp"

#include <algorithm>

namespace comaxdim::detail {
namespace {

class HittingSetSearch {
 public:
  HittingSetSearch(std::size_t universe, const std::vector<Bitset>& constraints)
      : n_(universe), constraints_(constraints), suffix_(universe + 1, Bitset(universe)) {
    for (std::size_t i = universe; i-- > 0;) {
      suffix_[i] = suffix_[i + 1];
      suffix_[i].set(i);
    }
  }

  std::optional<std::vector<Vertex>> run() {
    std::vector<std::size_t> open(constraints_.size());
    for (std::size_t c = 0; c < open.size(); ++c) open[c] = c;
    if (std::any_of(constraints_.begin(), constraints_.end(), [](const Bitset& c) { return c.none(); })) {
      return std::nullopt;
    }
    const auto root_bound = lower_bound(0, open);
    for (budget_ = root_bound.value_or(n_ + 1); budget_ <= n_; ++budget_) {
      chosen_.clear();
      if (descend(0, open)) return chosen_;
    }
    return std::nullopt;
  }

 private:
  // Minimum number of further picks from [next, n) to hit every open
  // constraint; nullopt when impossible.
  std::optional<std::size_t> lower_bound(std::size_t next, const std::vector<std::size_t>& open) const {
    const Bitset& undecided = suffix_[next];
    Bitset forced(n_);
    std::vector<Edge> pairs;
    for (std::size_t c : open) {
      const Bitset live = constraints_[c] & undecided;
      const auto first = live.find_first();
      if (first == Bitset::npos) return std::nullopt;
      const auto second = live.find_next(first);
      if (second == Bitset::npos) {
        forced.set(first);
      } else if (live.find_next(second) == Bitset::npos) {
        pairs.emplace_back(first, second);
      }
    }

    // Pairs not already hit by a forced pick must be vertex-covered; a
    // partition of their graph into cliques C_i needs sum(|C_i| - 1) picks.
    std::vector<Bitset> adjacency(n_, Bitset(n_));
    Bitset touched(n_);
    for (const auto& [a, b] : pairs) {
      if (forced.test(a) || forced.test(b)) continue;
      adjacency[a].set(b);
      adjacency[b].set(a);
      touched.set(a);
      touched.set(b);
    }
    std::size_t bound = forced.count();
    for (auto v = touched.find_first(); v != Bitset::npos; v = touched.find_first()) {
      touched.reset(v);
      Bitset extend = touched & adjacency[v];
      std::size_t clique = 1;
      for (auto w = extend.find_first(); w != Bitset::npos; w = extend.find_first()) {
        touched.reset(w);
        extend &= adjacency[w];
        ++clique;
      }
      bound += clique - 1;
    }
    return bound;
  }

  bool descend(std::size_t next, const std::vector<std::size_t>& open) {
    if (open.empty()) return true;
    if (chosen_.size() >= budget_ || next >= n_) return false;
    const auto bound = lower_bound(next, open);
    if (!bound || chosen_.size() + *bound > budget_) return false;

    std::vector<std::size_t> still_open;
    still_open.reserve(open.size());
    for (std::size_t c : open) {
      if (!constraints_[c].test(next)) still_open.push_back(c);
    }
    chosen_.push_back(next);
    if (descend(next + 1, still_open)) return true;
    chosen_.pop_back();
    return descend(next + 1, open);
  }

  std::size_t n_;
  const std::vector<Bitset>& constraints_;
  std::vector<Bitset> suffix_;
  std::size_t budget_ = 0;
  std::vector<Vertex> chosen_;
};

}  // namespace

std::optional<std::vector<Vertex>> min_hitting_set(std::size_t universe, const std::vector<Bitset>& constraints) {
  return HittingSetSearch(universe, constraints).run();
}

}  // namespace comaxdim::detail
