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

// Reference implementations used only by the tests. They share no code with
// the library: adjacency is a plain bool matrix, distances come from
// Floyd-Warshall, and the dimension oracles enumerate vertex subsets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "comaxdim/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Dist = std::vector<std::vector<int>>;

constexpr int kInf = 1 << 20;

inline Matrix adjacency_of(const comaxdim::Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

inline Dist floyd_warshall(const Matrix& adj) {
  const std::size_t n = adj.size();
  Dist d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

// Mixed-radix walk over all level vectors, last component fastest.
inline std::vector<std::vector<int>> all_level_vectors(const std::vector<int>& tops) {
  std::vector<std::vector<int>> out;
  std::function<void(std::vector<int>&, std::size_t)> rec = [&](std::vector<int>& cur, std::size_t i) {
    if (i == tops.size()) {
      out.push_back(cur);
      return;
    }
    for (int l = 0; l <= tops[i]; ++l) {
      cur[i] = l;
      rec(cur, i + 1);
    }
  };
  std::vector<int> cur(tops.size(), 0);
  rec(cur, 0);
  return out;
}

// Proper, nonzero ideals of the product that sit outside the Jacobson radical.
inline std::vector<std::vector<int>> gamma_vertices(const std::vector<int>& tops) {
  std::vector<std::vector<int>> out;
  for (const auto& l : all_level_vectors(tops)) {
    bool some_top = false;
    bool all_top = true;
    for (std::size_t i = 0; i < l.size(); ++i) {
      some_top = some_top || l[i] == tops[i];
      all_top = all_top && l[i] == tops[i];
    }
    if (some_top && !all_top) out.push_back(l);
  }
  return out;
}

inline bool sums_to_ring(const std::vector<int>& tops, const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < tops.size(); ++i) {
    if (std::max(a[i], b[i]) != tops[i]) return false;
  }
  return true;
}

inline Matrix gamma_adjacency(const std::vector<int>& tops) {
  const auto verts = gamma_vertices(tops);
  Matrix m(verts.size(), std::vector<bool>(verts.size(), false));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = 0; j < verts.size(); ++j) m[i][j] = i != j && sums_to_ring(tops, verts[i], verts[j]);
  }
  return m;
}

// Calls visit(mask) for every size-k subset of {0..n-1}; stops when visit
// returns true and reports whether it did.
inline bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(std::uint64_t)>& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return false;
  while (true) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t{1} << i;
    if (visit(mask)) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// One bitmask per unordered pair; a set works iff it meets every mask.
// Both properties are upward closed, so the minimum is n minus the largest
// removable set, found by growing the removed set until nothing works.
inline std::size_t min_hitting_by_removal(std::size_t n, const std::vector<std::uint64_t>& masks) {
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::size_t removable = 0;
  for (std::size_t t = 1; t <= n; ++t) {
    const bool found = for_each_subset(n, t, [&](std::uint64_t removed) {
      const std::uint64_t kept = full & ~removed;
      return std::all_of(masks.begin(), masks.end(), [&](std::uint64_t m) { return (m & kept) != 0; });
    });
    if (!found) break;
    removable = t;
  }
  return n - removable;
}

inline std::vector<std::uint64_t> strong_pair_masks(const Dist& d) {
  const std::size_t n = d.size();
  std::vector<std::uint64_t> out;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      std::uint64_t m = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (d[w][v] == d[w][u] + d[u][v] || d[w][u] == d[w][v] + d[v][u]) m |= std::uint64_t{1} << w;
      }
      out.push_back(m);
    }
  }
  return out;
}

inline std::vector<std::uint64_t> resolving_pair_masks(const Dist& d) {
  const std::size_t n = d.size();
  std::vector<std::uint64_t> out;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      std::uint64_t m = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (d[w][u] != d[w][v]) m |= std::uint64_t{1} << w;
      }
      out.push_back(m);
    }
  }
  return out;
}

inline std::size_t sdim(const Matrix& adj) {
  return min_hitting_by_removal(adj.size(), strong_pair_masks(floyd_warshall(adj)));
}

inline std::size_t dim(const Matrix& adj) {
  return min_hitting_by_removal(adj.size(), resolving_pair_masks(floyd_warshall(adj)));
}

// Maximum independent set size by plain subset enumeration (n <= ~24).
inline std::size_t independence_number(const Matrix& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(s));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!((s >> i) & 1U)) continue;
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = !(((s >> j) & 1U) && adj[i][j]);
    }
    if (ok) best = size;
  }
  return best;
}

// u is maximally distant from v when no neighbour of u is farther from v.
inline bool mmd(const Matrix& adj, const Dist& d, std::size_t u, std::size_t v) {
  auto maximal = [&](std::size_t a, std::size_t b) {
    for (std::size_t w = 0; w < adj.size(); ++w) {
      if (adj[a][w] && d[w][b] > d[a][b]) return false;
    }
    return true;
  };
  return maximal(u, v) && maximal(v, u);
}

}  // namespace oracle
