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

// Executable checks of the closed forms and structural identities for
// co-maximal ideal graphs, each compared against an exact computation.
//
// Check ids are stable strings; a sweep over a family of rings is a
// traceability matrix of (ring, id) -> status.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "comaxdim/comaximal.hpp"
#include "comaxdim/limits.hpp"
#include "comaxdim/ring_model.hpp"
#include "comaxdim/solver.hpp"
#include "comaxdim/strong_resolving.hpp"

namespace comaxdim {

/// Exactly one regime applies to every spec with at least two components.
enum class Regime {
  kReducedPair,   // two fields
  kReducedMulti,  // n >= 3 fields
  kNonReduced,    // every component is a non-field chain
  kMixed,         // at least one field and at least one non-field
};

/// Throws kEmptyGraph for single-component specs.
Regime classify(const RingSpec& spec);
std::string_view to_string(Regime regime);

/// Closed-form strong metric dimension of Γ(R):
/// two fields -> 1; n >= 3 fields -> 2^n - 2n; n non-fields -> |V| - 2n + 2;
/// n non-fields and m fields -> |V| - 2n - 2m + 2.
std::int64_t predicted_sdim(const RingSpec& spec);

/// Closed-form independence number of Γ(R)_SR:
/// 1, n - 2, 2n - 2 and 2n + m - 2 for the four regimes.
std::int64_t predicted_beta(const RingSpec& spec);

/// Predicted boundary ∂(Γ(R)) as indices into build_gamma(spec).
std::vector<Vertex> predicted_boundary(const RingGraph& gamma);

/// Nested ideals (1,0,...,0), (1,1,0,...,0), ..., with n-2 top components,
/// for a reduced spec with n >= 3 components.
std::vector<Ideal> nested_witness_chain(const RingSpec& spec);

enum class CheckStatus { kPass, kFail, kNotApplicable };
std::string_view to_string(CheckStatus status);

struct TheoremCheck {
  std::string id;
  std::string spec;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::kNotApplicable;
  std::vector<std::pair<std::string, std::string>> evidence;
};

/// Everything computed once per ring and shared by the checks.
struct RingAnalysis {
  RingSpec spec;
  Regime regime;
  DerivedGraphBundle graphs;
  DistanceMatrix::Distance gamma_diameter = 0;
  SrGraph srg;
  CoverSolution cover;
  SdimResult sdim;
  /// Filled by run_oracle().
  std::optional<SdimResult> oracle;
};

RingAnalysis analyze_ring(const RingSpec& spec, const Limits& limits = {});

/// Runs sdim_bruteforce on Γ(R) when it fits the brute-force cap.
/// Returns false (and leaves `oracle` empty) when it does not.
bool run_oracle(RingAnalysis& analysis, const Limits& limits = {});

std::vector<TheoremCheck> verify_sdim(const RingAnalysis& analysis, const Limits& limits = {});
std::vector<TheoremCheck> verify_boundary(const RingAnalysis& analysis);
std::vector<TheoremCheck> verify_beta(const RingAnalysis& analysis);
std::vector<TheoremCheck> verify_structure(const RingAnalysis& analysis);
std::vector<TheoremCheck> verify_distance_lemma(const RingAnalysis& analysis);

/// All verify_* on one analysis, in a fixed order.
std::vector<TheoremCheck> verify_all(const RingAnalysis& analysis, const Limits& limits = {});

// Spec-level conveniences: build the analysis, run the oracle when it fits
// the brute-force cap, then check.
std::vector<TheoremCheck> verify_sdim(const RingSpec& spec, const Limits& limits = {});
std::vector<TheoremCheck> verify_boundary(const RingSpec& spec, const Limits& limits = {});
std::vector<TheoremCheck> verify_beta(const RingSpec& spec, const Limits& limits = {});
std::vector<TheoremCheck> verify_structure(const RingSpec& spec, const Limits& limits = {});
std::vector<TheoremCheck> verify_distance_lemma(const RingSpec& spec, const Limits& limits = {});

struct SweepOptions {
  Limits limits;
  /// Cross-check with sdim_bruteforce whenever |V| <= limits.brute_cap.
  bool run_oracle = true;
};

struct SweepEntry {
  RingSpec spec;
  std::int64_t predicted_sdim = -1;
  std::optional<std::size_t> computed_sdim;
  std::optional<std::size_t> oracle_sdim;
  std::size_t vertex_count = 0;
  std::vector<TheoremCheck> checks;
  /// Non-empty when the ring could not be analysed (cap exceeded, ...).
  std::string error;

  [[nodiscard]] bool passed() const noexcept;
};

/// Per-ring errors are recorded in the entry; the sweep always continues.
std::vector<SweepEntry> sweep(const std::vector<RingSpec>& family, const SweepOptions& options = {});

bool all_passed(const std::vector<TheoremCheck>& checks) noexcept;

}  // namespace comaxdim
