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

#include "comaxdim/theorems.hpp"

#include <algorithm>
#include <map>

#include "comaxdim/errors.hpp"

namespace comaxdim {
namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

TheoremCheck make_check(std::string id, const RingSpec& spec) {
  TheoremCheck check;
  check.id = std::move(id);
  check.spec = spec.chain_vector();
  return check;
}

TheoremCheck not_applicable(std::string id, const RingSpec& spec, std::string why) {
  TheoremCheck check = make_check(std::move(id), spec);
  check.evidence.emplace_back("reason", std::move(why));
  return check;
}

void decide(TheoremCheck& check, bool ok) { check.status = ok ? CheckStatus::kPass : CheckStatus::kFail; }

TheoremCheck compare_values(std::string id, const RingSpec& spec, std::int64_t expected, std::int64_t computed) {
  TheoremCheck check = make_check(std::move(id), spec);
  check.expected = std::to_string(expected);
  check.computed = std::to_string(computed);
  decide(check, expected == computed);
  return check;
}

std::string join_labels(const Graph& g, const std::vector<Vertex>& vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i != 0) out += ' ';
    out += g.label(vertices[i]);
  }
  return out + "}";
}

std::string regime_suffix(Regime regime) {
  switch (regime) {
    case Regime::kReducedPair: return "reduced-pair";
    case Regime::kReducedMulti: return "reduced-formula";
    case Regime::kNonReduced: return "nonreduced-formula";
    case Regime::kMixed: return "mixed-formula";
  }
  return "unknown";
}

bool same_labeled_graph(const Graph& a, const Graph& b) { return a == b; }

RingGraph without_isolated(const RingGraph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.graph.order(); ++v) {
    if (g.graph.degree(v) > 0) keep.push_back(v);
  }
  std::vector<Ideal> ideals;
  for (Vertex v : keep) ideals.push_back(g.ideals[v]);
  return RingGraph{g.spec, std::move(ideals), induced_subgraph(g.graph, keep)};
}

// Maximal ideals obtained by lowering a field component to 0.
std::vector<Ideal> field_maximal_ideals(const RingSpec& spec) {
  std::vector<Ideal> out;
  for (const auto& m : enumerate_maximal_ideals(spec)) {
    for (std::size_t i = 0; i < spec.size(); ++i) {
      if (spec.components()[i].is_field() && m.levels[i] == 0) out.push_back(m);
    }
  }
  return out;
}

// The class of (R_1, ..., Nil(R_i), ..., R_n): masks with only bit i cleared.
std::vector<Vertex> single_gap_class(const RingGraph& g, std::size_t component) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.ideals.size(); ++v) {
    const auto mask = nil_class(g.spec, g.ideals[v]).mask;
    bool match = !mask[component];
    for (std::size_t j = 0; j < mask.size() && match; ++j) {
      if (j != component) match = mask[j];
    }
    if (match) out.push_back(v);
  }
  return out;
}

}  // namespace

Regime classify(const RingSpec& spec) {
  if (spec.size() < 2) {
    throw Error(ErrorKind::kEmptyGraph, "ring " + spec.chain_vector() + " has a single component; Γ(R) is empty");
  }
  if (spec.is_reduced()) return spec.size() == 2 ? Regime::kReducedPair : Regime::kReducedMulti;
  return spec.field_count() == 0 ? Regime::kNonReduced : Regime::kMixed;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::kReducedPair: return "reduced, two fields";
    case Regime::kReducedMulti: return "reduced, three or more fields";
    case Regime::kNonReduced: return "non-reduced, no field components";
    case Regime::kMixed: return "non-reduced with field components";
  }
  return "unknown";
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::int64_t predicted_sdim(const RingSpec& spec) {
  const auto n = as_int(spec.nonfield_count());
  const auto m = as_int(spec.field_count());
  const auto vertices = static_cast<std::int64_t>(spec.vertex_count());
  switch (classify(spec)) {
    case Regime::kReducedPair: return 1;
    case Regime::kReducedMulti: return (std::int64_t{1} << m) - 2 * m;
    case Regime::kNonReduced: return vertices - 2 * n + 2;
    case Regime::kMixed: return vertices - 2 * n - 2 * m + 2;
  }
  return -1;
}

std::int64_t predicted_beta(const RingSpec& spec) {
  const auto n = as_int(spec.nonfield_count());
  const auto m = as_int(spec.field_count());
  switch (classify(spec)) {
    case Regime::kReducedPair: return 1;
    case Regime::kReducedMulti: return m - 2;
    case Regime::kNonReduced: return 2 * n - 2;
    case Regime::kMixed: return 2 * n + m - 2;
  }
  return -1;
}

std::vector<Vertex> predicted_boundary(const RingGraph& gamma) {
  std::vector<Ideal> excluded;
  switch (classify(gamma.spec)) {
    case Regime::kReducedPair:
    case Regime::kNonReduced:
      break;
    case Regime::kReducedMulti:
      excluded = enumerate_maximal_ideals(gamma.spec);
      break;
    case Regime::kMixed:
      excluded = field_maximal_ideals(gamma.spec);
      break;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < gamma.ideals.size(); ++v) {
    if (std::find(excluded.begin(), excluded.end(), gamma.ideals[v]) == excluded.end()) out.push_back(v);
  }
  return out;
}

std::vector<Ideal> nested_witness_chain(const RingSpec& spec) {
  if (classify(spec) != Regime::kReducedMulti) {
    throw Error(ErrorKind::kInvalidArgument, "nested witness chain needs a product of at least three fields");
  }
  std::vector<Ideal> out;
  for (std::size_t t = 1; t + 2 <= spec.size(); ++t) {
    Ideal ideal{std::vector<int>(spec.size(), 0)};
    for (std::size_t i = 0; i < t; ++i) ideal.levels[i] = 1;
    out.push_back(std::move(ideal));
  }
  return out;
}

RingAnalysis analyze_ring(const RingSpec& spec, const Limits& limits) {
  const Regime regime = classify(spec);
  DerivedGraphBundle graphs = build_all(spec, limits);
  const auto diam = diameter(graphs.gamma.graph);
  SrgSdim pipeline = sdim_via_srg_detailed(graphs.gamma.graph, limits);
  return RingAnalysis{spec,
                      regime,
                      std::move(graphs),
                      diam,
                      std::move(pipeline.srg),
                      std::move(pipeline.cover),
                      std::move(pipeline.result),
                      std::nullopt};
}

bool run_oracle(RingAnalysis& analysis, const Limits& limits) {
  if (analysis.graphs.gamma.graph.order() > limits.brute_cap) return false;
  analysis.oracle = sdim_bruteforce(analysis.graphs.gamma.graph, limits);
  return true;
}

std::vector<TheoremCheck> verify_sdim(const RingAnalysis& a, const Limits& limits) {
  std::vector<TheoremCheck> out;
  const Graph& gamma = a.graphs.gamma.graph;

  TheoremCheck formula =
      compare_values("sdim." + regime_suffix(a.regime), a.spec, predicted_sdim(a.spec), as_int(a.sdim.sdim));
  formula.evidence.emplace_back("vertices", std::to_string(gamma.order()));
  formula.evidence.emplace_back("nonfields", std::to_string(a.spec.nonfield_count()));
  formula.evidence.emplace_back("fields", std::to_string(a.spec.field_count()));
  formula.evidence.emplace_back("witness", join_labels(gamma, a.sdim.witness));
  out.push_back(std::move(formula));

  TheoremCheck witness = make_check("sdim.witness-valid", a.spec);
  witness.expected = "strong resolving set of size " + std::to_string(a.sdim.sdim);
  const bool valid = a.sdim.witness.size() == a.sdim.sdim && is_strong_resolving_set(gamma, a.sdim.witness);
  witness.computed = valid ? witness.expected : "invalid witness";
  decide(witness, valid);
  out.push_back(std::move(witness));

  if (a.oracle) {
    TheoremCheck oracle = compare_values("sdim.oracle", a.spec, as_int(a.sdim.sdim), as_int(a.oracle->sdim));
    oracle.evidence.emplace_back("oracle-witness", join_labels(gamma, a.oracle->witness));
    out.push_back(std::move(oracle));
  } else {
    out.push_back(not_applicable("sdim.oracle", a.spec,
                                 gamma.order() > limits.brute_cap
                                     ? "|V| = " + std::to_string(gamma.order()) + " exceeds brute-force cap " +
                                           std::to_string(limits.brute_cap)
                                     : "oracle not requested"));
  }
  return out;
}

std::vector<TheoremCheck> verify_boundary(const RingAnalysis& a) {
  const auto expected = predicted_boundary(a.graphs.gamma);
  TheoremCheck check = make_check("boundary." + regime_suffix(a.regime), a.spec);
  check.expected = std::to_string(expected.size());
  check.computed = std::to_string(a.srg.boundary.size());
  decide(check, expected == a.srg.boundary);
  check.evidence.emplace_back("set-equal", expected == a.srg.boundary ? "yes" : "no");
  if (a.regime == Regime::kMixed) {
    check.evidence.emplace_back("note", "predicted set: V minus maximal ideals at field positions (by analogy)");
  }
  return {std::move(check)};
}

std::vector<TheoremCheck> verify_beta(const RingAnalysis& a) {
  std::vector<TheoremCheck> out;
  const Graph& srg = a.srg.srg;

  TheoremCheck beta =
      compare_values("beta." + regime_suffix(a.regime), a.spec, predicted_beta(a.spec), as_int(a.cover.beta));
  beta.evidence.emplace_back("srg-order", std::to_string(srg.order()));
  beta.evidence.emplace_back("independent-witness", join_labels(srg, a.cover.independent_witness));
  out.push_back(std::move(beta));

  TheoremCheck gallai = make_check("cover.gallai", a.spec);
  gallai.expected = std::to_string(srg.order());
  gallai.computed = std::to_string(a.cover.alpha + a.cover.beta);
  const bool witnesses_ok = is_vertex_cover(srg, a.cover.cover_witness) &&
                            is_independent_set(srg, a.cover.independent_witness) &&
                            a.cover.cover_witness.size() == a.cover.alpha &&
                            a.cover.independent_witness.size() == a.cover.beta;
  decide(gallai, a.cover.alpha + a.cover.beta == srg.order() && witnesses_ok);
  gallai.evidence.emplace_back("witnesses-valid", witnesses_ok ? "yes" : "no");
  out.push_back(std::move(gallai));

  if (a.regime != Regime::kReducedMulti) {
    out.push_back(not_applicable("beta.nested-witness", a.spec, "needs a product of at least three fields"));
    out.push_back(not_applicable("beta.nzc-witness", a.spec, "needs a product of at least three fields"));
    return out;
  }

  const auto n = static_cast<int>(a.spec.size());
  TheoremCheck nested = make_check("beta.nested-witness", a.spec);
  std::vector<Vertex> chain;
  bool all_in_boundary = true;
  for (const auto& ideal : nested_witness_chain(a.spec)) {
    const Vertex base = a.graphs.gamma.index_of(ideal);
    const auto it = std::find(a.srg.boundary.begin(), a.srg.boundary.end(), base);
    if (base == RingGraph::npos || it == a.srg.boundary.end()) {
      all_in_boundary = false;
      continue;
    }
    chain.push_back(static_cast<Vertex>(it - a.srg.boundary.begin()));
  }
  const bool independent = all_in_boundary && is_independent_set(srg, chain);
  nested.expected = "independent chain of size " + std::to_string(n - 2);
  nested.computed = independent ? "independent chain of size " + std::to_string(chain.size()) : "not independent";
  decide(nested, independent && as_int(chain.size()) == n - 2 && as_int(chain.size()) == as_int(a.cover.beta));
  nested.evidence.emplace_back("chain", join_labels(srg, chain));
  out.push_back(std::move(nested));

  TheoremCheck top_nzc = make_check("beta.nzc-witness", a.spec);
  int best = 0;
  for (Vertex v : a.cover.independent_witness) {
    best = std::max(best, nzc(a.graphs.gamma.ideals[a.srg.boundary[v]]));
  }
  top_nzc.expected = std::to_string(n - 2);
  top_nzc.computed = std::to_string(best);
  decide(top_nzc, best == n - 2);
  out.push_back(std::move(top_nzc));
  return out;
}

std::vector<TheoremCheck> verify_structure(const RingAnalysis& a) {
  std::vector<TheoremCheck> out;
  const auto& gamma = a.graphs.gamma;
  const auto& gss = a.graphs.gamma_star_star;
  const Graph& srg = a.srg.srg;
  const bool reduced = a.regime == Regime::kReducedPair || a.regime == Regime::kReducedMulti;

  // Diameter bound and connectivity of Γ itself.
  {
    TheoremCheck diam = make_check("gamma.diameter-bound", a.spec);
    diam.expected = "connected, diameter <= 3";
    diam.computed = std::string(gamma.graph.is_connected() ? "connected" : "disconnected") +
                    ", diameter " + distance_to_string(a.gamma_diameter);
    decide(diam, gamma.graph.is_connected() && a.gamma_diameter <= 3);
    out.push_back(std::move(diam));
  }

  if (reduced) {
    TheoremCheck eq = make_check("structure.srg-equals-gamma-star", a.spec);
    eq.expected = "Γ* = Γ_SR";
    const bool same = same_labeled_graph(a.graphs.gamma_star.graph, srg);
    eq.computed = same ? eq.expected : "graphs differ";
    decide(eq, same);
    eq.evidence.emplace_back("gamma-star-order", std::to_string(a.graphs.gamma_star.graph.order()));
    eq.evidence.emplace_back("srg-order", std::to_string(srg.order()));
    out.push_back(std::move(eq));
  } else {
    out.push_back(not_applicable("structure.srg-equals-gamma-star", a.spec, "ring is not reduced"));
  }

  if (a.regime == Regime::kNonReduced || a.regime == Regime::kMixed) {
    TheoremCheck eq = make_check("structure.srg-equals-gamma-prime", a.spec);
    const bool mixed = a.regime == Regime::kMixed;
    const RingGraph compared = mixed ? without_isolated(a.graphs.gamma_prime) : a.graphs.gamma_prime;
    eq.expected = mixed ? "Γ' minus isolated vertices = Γ_SR" : "Γ' = Γ_SR";
    const bool same = same_labeled_graph(compared.graph, srg);
    eq.computed = same ? eq.expected : "graphs differ";
    decide(eq, same);
    if (mixed) eq.evidence.emplace_back("note", "Γ' extended by analogy to field components");
    out.push_back(std::move(eq));
  } else {
    out.push_back(not_applicable("structure.srg-equals-gamma-prime", a.spec, "ring is reduced"));
  }

  if (a.regime == Regime::kReducedMulti) {
    TheoremCheck iso = make_check("structure.max-ideals-isolated", a.spec);
    std::vector<Ideal> isolated;
    for (Vertex v = 0; v < gss.graph.order(); ++v) {
      if (gss.graph.degree(v) == 0) isolated.push_back(gss.ideals[v]);
    }
    const auto maximal = enumerate_maximal_ideals(a.spec);
    iso.expected = std::to_string(maximal.size()) + " isolated vertices = Max(R)";
    iso.computed = std::to_string(isolated.size()) + " isolated vertices";
    decide(iso, isolated == maximal);
    out.push_back(std::move(iso));
  } else {
    out.push_back(not_applicable("structure.max-ideals-isolated", a.spec, "needs a product of at least three fields"));
  }

  // Component shape of Γ**.
  if (a.regime == Regime::kReducedPair) {
    TheoremCheck shape = make_check("structure.gamma-star-star-shape", a.spec);
    shape.expected = "Γ** = 2K1, Γ* = Γ = Γ_SR = K2";
    const bool ok = gss.graph.order() == 2 && gss.graph.edge_count() == 0 && gamma.graph.order() == 2 &&
                    gamma.graph.is_complete() && a.graphs.gamma_star.graph == gamma.graph && srg == gamma.graph;
    shape.computed = ok ? shape.expected : "shape differs";
    decide(shape, ok);
    out.push_back(std::move(shape));
  } else if (a.regime == Regime::kReducedMulti) {
    TheoremCheck shape = make_check("structure.gamma-star-star-shape", a.spec);
    const auto components = decompose_components(gss.graph);
    std::size_t singletons = 0;
    std::size_t large = 0;
    for (const auto& c : components) (c.size() == 1 ? singletons : large) += 1;
    shape.expected = "H + " + std::to_string(a.spec.size()) + "K1 with H connected";
    shape.computed = std::to_string(large) + " non-trivial component(s) + " + std::to_string(singletons) + "K1";
    decide(shape, singletons == a.spec.size() && large == 1);
    out.push_back(std::move(shape));
  } else {
    out.push_back(not_applicable("structure.gamma-star-star-shape", a.spec, "ring is not reduced"));
  }

  // Component shape of Γ': one clique per non-field component, plus H'.
  if (a.regime == Regime::kNonReduced || a.regime == Regime::kMixed) {
    TheoremCheck shape = make_check("structure.gamma-prime-shape", a.spec);
    const Graph& gp = a.graphs.gamma_prime.graph;
    const auto components = decompose_components(gp);
    auto find_component = [&](const std::vector<Vertex>& members) {
      return std::find_if(components.begin(), components.end(),
                          [&](const GraphComponent& c) { return c.vertices == members; });
    };

    bool ok = true;
    std::vector<Vertex> accounted;
    std::string sizes;
    for (std::size_t i = 0; i < a.spec.size(); ++i) {
      if (a.spec.components()[i].is_field()) continue;
      const auto members = single_gap_class(a.graphs.gamma_prime, i);
      const auto it = find_component(members);
      const bool clique_ok = it != components.end() && it->is_clique &&
                             members.size() == static_cast<std::size_t>(a.spec.chain_length(i));
      ok = ok && clique_ok;
      sizes += (sizes.empty() ? "" : ",") + std::to_string(members.size());
      accounted.insert(accounted.end(), members.begin(), members.end());
    }
    // Field-position maximal ideals are isolated in the mixed extension.
    for (const auto& m : field_maximal_ideals(a.spec)) {
      const Vertex v = a.graphs.gamma_prime.index_of(m);
      ok = ok && v != RingGraph::npos && gp.degree(v) == 0;
      accounted.push_back(v);
    }
    std::sort(accounted.begin(), accounted.end());
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < gp.order(); ++v) {
      if (!std::binary_search(accounted.begin(), accounted.end(), v)) rest.push_back(v);
    }
    const bool rest_ok = a.spec.size() == 2 ? rest.empty() : (!rest.empty() && find_component(rest) != components.end());
    ok = ok && rest_ok;

    shape.expected = a.spec.size() == 2 ? "cliques only, H' empty" : "cliques + connected H'";
    shape.computed = "cliques {" + sizes + "}, H' of order " + std::to_string(rest.size()) +
                     (rest_ok ? (rest.empty() ? "" : " (connected)") : " (shape differs)");
    decide(shape, ok);
    if (a.regime == Regime::kMixed) shape.evidence.emplace_back("note", "mixed case checked by analogy");
    out.push_back(std::move(shape));
  } else {
    out.push_back(not_applicable("structure.gamma-prime-shape", a.spec, "ring is reduced"));
  }

  // Same nil class => equal closed neighbourhoods in Γ, checked literally,
  // and the open-neighbourhood (twin) form that the sdim arguments rely on.
  if (!reduced) {
    TheoremCheck closed = make_check("structure.class-closed-neighborhoods", a.spec);
    TheoremCheck open = make_check("structure.class-open-neighborhoods", a.spec);
    std::map<NilClass, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < gamma.ideals.size(); ++v) classes[nil_class(a.spec, gamma.ideals[v])].push_back(v);
    std::size_t pairs = 0;
    std::size_t closed_violations = 0;
    std::size_t open_violations = 0;
    std::size_t adjacent_pairs = 0;
    for (const auto& [mask, members] : classes) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        const auto ni = neighborhoods(gamma.graph, members[i]);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          const auto nj = neighborhoods(gamma.graph, members[j]);
          ++pairs;
          if (ni.closed != nj.closed) ++closed_violations;
          if (ni.open != nj.open) ++open_violations;
          if (gamma.graph.adjacent(members[i], members[j])) ++adjacent_pairs;
        }
      }
    }
    closed.expected = "0 violations";
    closed.computed = std::to_string(closed_violations) + " violations";
    decide(closed, closed_violations == 0);
    closed.evidence.emplace_back("classes", std::to_string(classes.size()));
    closed.evidence.emplace_back("pairs", std::to_string(pairs));
    closed.evidence.emplace_back("adjacent_pairs", std::to_string(adjacent_pairs));
    if (closed_violations != 0 && adjacent_pairs == 0) {
      closed.evidence.emplace_back(
          "note", "same-class ideals share their non-top positions, so I + J != R and they are never adjacent; "
                  "J lies in N[J] but not in N[I]");
    }
    out.push_back(std::move(closed));

    open.expected = "0 violations";
    open.computed = std::to_string(open_violations) + " violations";
    decide(open, open_violations == 0);
    open.evidence.emplace_back("pairs", std::to_string(pairs));
    out.push_back(std::move(open));
  } else {
    out.push_back(not_applicable("structure.class-closed-neighborhoods", a.spec, "classes are singletons"));
    out.push_back(not_applicable("structure.class-open-neighborhoods", a.spec, "classes are singletons"));
  }
  return out;
}

std::vector<TheoremCheck> verify_distance_lemma(const RingAnalysis& a) {
  if (!a.spec.is_reduced()) {
    return {not_applicable("distance.trichotomy", a.spec, "needs a product of fields"),
            not_applicable("distance.comparable-not-mmd", a.spec, "needs a product of fields")};
  }
  const auto& gamma = a.graphs.gamma;
  const Graph& g = gamma.graph;
  std::size_t mismatches = 0;
  std::size_t mmd_violations = 0;
  std::size_t pairs = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      ++pairs;
      const Ideal& i = gamma.ideals[u];
      const Ideal& j = gamma.ideals[v];
      const bool comaximal = is_comaximal(a.spec, i, j);
      const bool meet_zero = is_zero(ideal_meet(a.spec, i, j));
      const auto predicted = comaximal ? 1U : (meet_zero ? 3U : 2U);
      if (g.distance(u, v) != predicted) ++mismatches;
      const bool comparable = ideal_contains(a.spec, i, j) || ideal_contains(a.spec, j, i);
      if ((comparable || comaximal) && is_mutually_maximally_distant(g, u, v)) ++mmd_violations;
    }
  }
  TheoremCheck tri = make_check("distance.trichotomy", a.spec);
  tri.expected = "0 mismatches";
  tri.computed = std::to_string(mismatches) + " mismatches";
  decide(tri, mismatches == 0);
  tri.evidence.emplace_back("pairs", std::to_string(pairs));

  if (a.regime == Regime::kReducedPair) {
    // Γ = K2 and its two vertices are co-maximal yet mutually maximally distant.
    return {std::move(tri), not_applicable("distance.comparable-not-mmd", a.spec,
                                           "with two fields Γ = K2, whose endpoints are mutually maximally distant")};
  }
  TheoremCheck mmd = make_check("distance.comparable-not-mmd", a.spec);
  mmd.expected = "0 violations";
  mmd.computed = std::to_string(mmd_violations) + " violations";
  decide(mmd, mmd_violations == 0);
  return {std::move(tri), std::move(mmd)};
}

std::vector<TheoremCheck> verify_all(const RingAnalysis& analysis, const Limits& limits) {
  std::vector<TheoremCheck> out;
  for (auto part : {verify_sdim(analysis, limits), verify_boundary(analysis), verify_beta(analysis),
                    verify_structure(analysis), verify_distance_lemma(analysis)}) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

namespace {

RingAnalysis analysis_with_oracle(const RingSpec& spec, const Limits& limits) {
  RingAnalysis analysis = analyze_ring(spec, limits);
  run_oracle(analysis, limits);
  return analysis;
}

}  // namespace

std::vector<TheoremCheck> verify_sdim(const RingSpec& spec, const Limits& limits) {
  return verify_sdim(analysis_with_oracle(spec, limits), limits);
}
std::vector<TheoremCheck> verify_boundary(const RingSpec& spec, const Limits& limits) {
  return verify_boundary(analyze_ring(spec, limits));
}
std::vector<TheoremCheck> verify_beta(const RingSpec& spec, const Limits& limits) {
  return verify_beta(analyze_ring(spec, limits));
}
std::vector<TheoremCheck> verify_structure(const RingSpec& spec, const Limits& limits) {
  return verify_structure(analyze_ring(spec, limits));
}
std::vector<TheoremCheck> verify_distance_lemma(const RingSpec& spec, const Limits& limits) {
  return verify_distance_lemma(analyze_ring(spec, limits));
}

bool all_passed(const std::vector<TheoremCheck>& checks) noexcept {
  return std::none_of(checks.begin(), checks.end(),
                      [](const TheoremCheck& c) { return c.status == CheckStatus::kFail; });
}

bool SweepEntry::passed() const noexcept { return error.empty() && all_passed(checks); }

std::vector<SweepEntry> sweep(const std::vector<RingSpec>& family, const SweepOptions& options) {
  std::vector<SweepEntry> out;
  out.reserve(family.size());
  for (const auto& spec : family) {
    SweepEntry entry{spec, -1, std::nullopt, std::nullopt, 0, {}, {}};
    try {
      entry.predicted_sdim = predicted_sdim(spec);
      RingAnalysis analysis = analyze_ring(spec, options.limits);
      entry.vertex_count = analysis.graphs.gamma.graph.order();
      entry.computed_sdim = analysis.sdim.sdim;
      if (options.run_oracle && run_oracle(analysis, options.limits)) entry.oracle_sdim = analysis.oracle->sdim;
      entry.checks = verify_all(analysis, options.limits);
    } catch (const Error& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace comaxdim
