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

// Finite commutative rings R = R_1 x ... x R_n modelled through their ideal
// lattices. Every local factor is a chain ring: its ideals form a single chain
// 0 = L_0 < L_1 < ... < L_k = R_i, so an ideal of R is a vector of levels.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "comaxdim/limits.hpp"

namespace comaxdim {

struct ChainComponent {
  /// Number of nonzero ideals in the chain; 1 means the component is a field.
  int chain_length = 1;
  /// Token the component was parsed from, e.g. "Z4" or "F(9)". Display only.
  std::string label;

  [[nodiscard]] bool is_field() const noexcept { return chain_length == 1; }

  friend bool operator==(const ChainComponent& a, const ChainComponent& b) {
    return a.chain_length == b.chain_length;
  }
};

class RingSpec {
 public:
  /// Throws kInvalidArgument on an empty product or a chain length < 1.
  explicit RingSpec(std::vector<ChainComponent> components);

  /// Convenience: unlabeled components with the given chain lengths.
  static RingSpec from_chain_lengths(const std::vector<int>& lengths);

  [[nodiscard]] std::size_t size() const noexcept { return components_.size(); }
  [[nodiscard]] const std::vector<ChainComponent>& components() const noexcept {
    return components_;
  }
  [[nodiscard]] int chain_length(std::size_t i) const { return components_.at(i).chain_length; }
  [[nodiscard]] std::vector<int> chain_lengths() const;

  /// Components that are local but not fields (chain_length >= 2).
  [[nodiscard]] std::size_t nonfield_count() const noexcept;
  /// Components that are fields (chain_length == 1).
  [[nodiscard]] std::size_t field_count() const noexcept;
  [[nodiscard]] bool is_reduced() const noexcept { return nonfield_count() == 0; }

  /// prod(k_i + 1); saturates at UINT64_MAX.
  [[nodiscard]] std::uint64_t ideal_count() const noexcept;
  /// prod(k_i + 1) - prod(k_i) - 1, the order of the co-maximal ideal graph.
  [[nodiscard]] std::uint64_t vertex_count() const noexcept;

  /// Canonical DSL text, e.g. "C2 x C2 x C3" (fields render as "F").
  [[nodiscard]] std::string canonical() const;
  /// Level-vector text, e.g. "(2,2,3)".
  [[nodiscard]] std::string chain_vector() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<ChainComponent> components_;
};

/// Parses the ring DSL: atoms `F`, `F(q)`, `Ck`, `Zp^k`, `Zn` (n a prime
/// power) joined by `x` or `×`; case- and whitespace-insensitive.
/// Non-fatal notes (e.g. an ignored field order) are appended to `warnings`.
RingSpec parse_ring_spec(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// An ideal of a RingSpec as a level vector: 0 is the zero ideal of a
/// component, k_i the whole component, values in between the proper chain.
struct Ideal {
  std::vector<int> levels;

  [[nodiscard]] std::size_t size() const noexcept { return levels.size(); }
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const Ideal&, const Ideal&) = default;
};

/// Mask with bit i set iff component i of the ideal is the whole R_i, i.e.
/// the component is not inside the nilradical Nil(R_i). Equal masks are the
/// equivalence classes of the relation "I_i ⊆ Nil(R_i) iff J_i ⊆ Nil(R_i)".
struct NilClass {
  std::vector<bool> mask;

  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const NilClass&, const NilClass&) = default;
};

/// All prod(k_i + 1) ideals in lexicographic order of level vectors.
std::vector<Ideal> enumerate_ideals(const RingSpec& spec, const Limits& limits = {});

/// Proper ideals outside the Jacobson radical, lexicographic order.
/// Throws kEmptyGraph for a single-component spec.
std::vector<Ideal> enumerate_vertices(const RingSpec& spec, const Limits& limits = {});

/// The n+m maximal ideals: one component at level k_i - 1, the rest at top.
std::vector<Ideal> enumerate_maximal_ideals(const RingSpec& spec);

/// Throws kInvalidArgument unless `ideal` is a valid level vector of `spec`.
void validate_ideal(const RingSpec& spec, const Ideal& ideal);

Ideal ideal_sum(const RingSpec& spec, const Ideal& a, const Ideal& b);
Ideal ideal_meet(const RingSpec& spec, const Ideal& a, const Ideal& b);
bool ideal_contains(const RingSpec& spec, const Ideal& outer, const Ideal& inner);

bool is_whole_ring(const RingSpec& spec, const Ideal& ideal);
bool is_zero(const Ideal& ideal);
/// Proper and not contained in J(R): some component at top, some below.
bool is_vertex(const RingSpec& spec, const Ideal& ideal);
bool is_maximal(const RingSpec& spec, const Ideal& ideal);

/// a + b = R. Both must be vertices and distinct (kInvalidArgument otherwise).
bool is_comaximal(const RingSpec& spec, const Ideal& a, const Ideal& b);

/// Number of nonzero components.
int nzc(const Ideal& ideal);

NilClass nil_class(const RingSpec& spec, const Ideal& ideal);

/// I': every component that is nonzero but nilpotent is replaced by 0.
Ideal prime_reduction(const RingSpec& spec, const Ideal& ideal);

}  // namespace comaxdim
