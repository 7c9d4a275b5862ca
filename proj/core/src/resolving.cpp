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
#include <stdexcept>

#include "comaxdim/errors.hpp"
#include "comaxdim/solver.hpp"
#include "hitting_set.hpp"

namespace comaxdim {
namespace {

void require_connected(const Graph& g, std::string_view what) {
  if (!g.is_connected()) throw Error(ErrorKind::kDisconnected, std::string(what) + " needs a connected graph");
}

void require_brute_cap(const Graph& g, const Limits& limits, std::string_view what) {
  if (g.order() > limits.brute_cap) {
    throw Error(ErrorKind::kCapExceeded, std::string(what) + " on " + std::to_string(g.order()) +
                                             " vertices exceeds brute-force cap " +
                                             std::to_string(limits.brute_cap));
  }
}

// Everything that strongly resolves {u, v}: both endpoints, plus any w with u
// on a shortest w-v path or v on a shortest w-u path.
std::vector<Bitset> strong_resolver_sets(const Graph& g) {
  std::vector<Bitset> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      Bitset resolvers(g.order());
      for (Vertex w = 0; w < g.order(); ++w) {
        if (strongly_resolves(g, w, u, v)) resolvers.set(w);
      }
      out.push_back(std::move(resolvers));
    }
  }
  return out;
}

// A resolving set must contain u or v, or some w at different distances.
std::vector<Bitset> distinguisher_sets(const Graph& g) {
  std::vector<Bitset> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      Bitset members(g.order());
      members.set(u);
      members.set(v);
      for (Vertex w = 0; w < g.order(); ++w) {
        if (g.distance(w, u) != g.distance(w, v)) members.set(w);
      }
      out.push_back(std::move(members));
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(SdimMethod method) {
  return method == SdimMethod::kSrgCover ? "srg_cover" : "brute_force";
}

SrgSdim sdim_via_srg_detailed(const Graph& g, const Limits& limits) {
  SrgSdim out;
  out.srg = build_srg(g);
  out.cover = max_independent_set(out.srg.srg, limits);
  out.result.sdim = out.cover.alpha;
  out.result.witness = out.srg.to_base(out.cover.cover_witness);
  out.result.method = SdimMethod::kSrgCover;
  return out;
}

SdimResult sdim_via_srg(const Graph& g, const Limits& limits) { return sdim_via_srg_detailed(g, limits).result; }

bool strongly_resolves(const Graph& g, Vertex w, Vertex u, Vertex v) {
  const auto dwu = g.distance(w, u);
  const auto dwv = g.distance(w, v);
  const auto duv = g.distance(u, v);
  if (dwu == DistanceMatrix::kInfinity || dwv == DistanceMatrix::kInfinity || duv == DistanceMatrix::kInfinity) {
    return false;
  }
  return dwv == dwu + duv || dwu == dwv + duv;
}

bool is_strong_resolving_set(const Graph& g, const std::vector<Vertex>& set) {
  const Bitset members = to_bitset(g.order(), set);
  require_connected(g, "strong resolving set");
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      bool resolved = false;
      for (auto w = members.find_first(); w != Bitset::npos && !resolved; w = members.find_next(w)) {
        resolved = strongly_resolves(g, w, u, v);
      }
      if (!resolved) return false;
    }
  }
  return true;
}

SdimResult sdim_bruteforce(const Graph& g, const Limits& limits) {
  require_brute_cap(g, limits, "brute-force strong metric dimension");
  require_connected(g, "strong metric dimension");
  auto witness = detail::min_hitting_set(g.order(), strong_resolver_sets(g));
  if (!witness || !is_strong_resolving_set(g, *witness)) {
    throw std::logic_error("sdim_bruteforce: search returned no valid strong resolving set");
  }
  return SdimResult{witness->size(), std::move(*witness), SdimMethod::kBruteForce};
}

bool is_resolving_set(const Graph& g, const std::vector<Vertex>& set) {
  const Bitset members = to_bitset(g.order(), set);
  require_connected(g, "resolving set");
  for (Vertex u = 0; u < g.order(); ++u) {
    if (members.test(u)) continue;
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (members.test(v)) continue;
      bool distinguished = false;
      for (auto w = members.find_first(); w != Bitset::npos && !distinguished; w = members.find_next(w)) {
        distinguished = g.distance(w, u) != g.distance(w, v);
      }
      if (!distinguished) return false;
    }
  }
  return true;
}

MetricBasis metric_basis_bruteforce(const Graph& g, const Limits& limits) {
  require_brute_cap(g, limits, "brute-force metric dimension");
  require_connected(g, "metric dimension");
  auto basis = detail::min_hitting_set(g.order(), distinguisher_sets(g));
  if (!basis || !is_resolving_set(g, *basis)) {
    throw std::logic_error("metric_basis_bruteforce: search returned no valid resolving set");
  }
  return MetricBasis{basis->size(), std::move(*basis)};
}

std::size_t dim_bruteforce(const Graph& g, const Limits& limits) { return metric_basis_bruteforce(g, limits).dim; }

}  // namespace comaxdim
