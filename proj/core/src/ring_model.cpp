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

#include "comaxdim/ring_model.hpp"

#include <algorithm>
#include <limits>

#include "comaxdim/errors.hpp"

namespace comaxdim {
namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

void require_same_spec(const RingSpec& spec, const Ideal& a, const Ideal& b) {
  validate_ideal(spec, a);
  validate_ideal(spec, b);
}

}  // namespace

RingSpec::RingSpec(std::vector<ChainComponent> components) : components_(std::move(components)) {
  if (components_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "ring spec must have at least one component");
  }
  for (const auto& c : components_) {
    if (c.chain_length < 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "chain length must be >= 1, got " + std::to_string(c.chain_length));
    }
  }
}

RingSpec RingSpec::from_chain_lengths(const std::vector<int>& lengths) {
  std::vector<ChainComponent> components;
  components.reserve(lengths.size());
  for (int k : lengths) components.push_back({k, {}});
  return RingSpec(std::move(components));
}

std::vector<int> RingSpec::chain_lengths() const {
  std::vector<int> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.chain_length);
  return out;
}

std::size_t RingSpec::nonfield_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(components_.begin(), components_.end(), [](const auto& c) { return !c.is_field(); }));
}

std::size_t RingSpec::field_count() const noexcept { return size() - nonfield_count(); }

std::uint64_t RingSpec::ideal_count() const noexcept {
  std::uint64_t total = 1;
  for (const auto& c : components_) total = saturating_mul(total, static_cast<std::uint64_t>(c.chain_length) + 1);
  return total;
}

std::uint64_t RingSpec::vertex_count() const noexcept {
  std::uint64_t inside_radical = 1;
  for (const auto& c : components_) inside_radical = saturating_mul(inside_radical, static_cast<std::uint64_t>(c.chain_length));
  const std::uint64_t total = ideal_count();
  if (total == std::numeric_limits<std::uint64_t>::max()) return total;
  return total - inside_radical - 1;
}

std::string RingSpec::canonical() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i != 0) out += " x ";
    const int k = components_[i].chain_length;
    out += k == 1 ? std::string("F") : "C" + std::to_string(k);
  }
  return out;
}

std::string RingSpec::chain_vector() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(components_[i].chain_length);
  }
  return out + ")";
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(levels[i]);
  }
  return out + ")";
}

std::string NilClass::to_string() const {
  std::string out;
  out.reserve(mask.size());
  for (bool bit : mask) out += bit ? '1' : '0';
  return out;
}

void validate_ideal(const RingSpec& spec, const Ideal& ideal) {
  if (ideal.size() != spec.size()) {
    throw Error(ErrorKind::kInvalidArgument, "ideal " + ideal.to_string() + " does not belong to ring " +
                                                 spec.chain_vector() + " (component count mismatch)");
  }
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (ideal.levels[i] < 0 || ideal.levels[i] > spec.chain_length(i)) {
      throw Error(ErrorKind::kInvalidArgument, "ideal " + ideal.to_string() + " does not belong to ring " +
                                                   spec.chain_vector() + " (level out of range)");
    }
  }
}

std::vector<Ideal> enumerate_ideals(const RingSpec& spec, const Limits& limits) {
  const std::uint64_t total = spec.ideal_count();
  if (total > limits.enum_cap) {
    throw Error(ErrorKind::kCapExceeded, "ring " + spec.chain_vector() + " has " + std::to_string(total) +
                                             " ideals, enumeration cap is " + std::to_string(limits.enum_cap));
  }
  std::vector<Ideal> out;
  out.reserve(static_cast<std::size_t>(total));
  Ideal current{std::vector<int>(spec.size(), 0)};
  // Odometer with the last component varying fastest gives lexicographic order.
  while (true) {
    out.push_back(current);
    std::size_t i = spec.size();
    while (i > 0) {
      --i;
      if (current.levels[i] < spec.chain_length(i)) {
        ++current.levels[i];
        break;
      }
      current.levels[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<Ideal> enumerate_vertices(const RingSpec& spec, const Limits& limits) {
  if (spec.size() < 2) {
    throw Error(ErrorKind::kEmptyGraph, "ring " + spec.chain_vector() +
                                            " is local: every proper ideal lies in the Jacobson radical");
  }
  std::vector<Ideal> out;
  for (auto& ideal : enumerate_ideals(spec, limits)) {
    if (is_vertex(spec, ideal)) out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<Ideal> enumerate_maximal_ideals(const RingSpec& spec) {
  std::vector<Ideal> out;
  const auto top = spec.chain_lengths();
  // Lowering an earlier component gives a lexicographically smaller vector.
  for (std::size_t i = 0; i < spec.size(); ++i) {
    Ideal m{top};
    --m.levels[i];
    out.push_back(std::move(m));
  }
  return out;
}

Ideal ideal_sum(const RingSpec& spec, const Ideal& a, const Ideal& b) {
  require_same_spec(spec, a, b);
  Ideal out{a.levels};
  for (std::size_t i = 0; i < out.size(); ++i) out.levels[i] = std::max(a.levels[i], b.levels[i]);
  return out;
}

Ideal ideal_meet(const RingSpec& spec, const Ideal& a, const Ideal& b) {
  require_same_spec(spec, a, b);
  Ideal out{a.levels};
  for (std::size_t i = 0; i < out.size(); ++i) out.levels[i] = std::min(a.levels[i], b.levels[i]);
  return out;
}

bool ideal_contains(const RingSpec& spec, const Ideal& outer, const Ideal& inner) {
  require_same_spec(spec, outer, inner);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (inner.levels[i] > outer.levels[i]) return false;
  }
  return true;
}

bool is_whole_ring(const RingSpec& spec, const Ideal& ideal) {
  validate_ideal(spec, ideal);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (ideal.levels[i] != spec.chain_length(i)) return false;
  }
  return true;
}

bool is_zero(const Ideal& ideal) {
  return std::all_of(ideal.levels.begin(), ideal.levels.end(), [](int l) { return l == 0; });
}

bool is_vertex(const RingSpec& spec, const Ideal& ideal) {
  validate_ideal(spec, ideal);
  bool some_top = false;
  bool some_below = false;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (ideal.levels[i] == spec.chain_length(i)) {
      some_top = true;
    } else {
      some_below = true;
    }
  }
  return some_top && some_below;
}

bool is_maximal(const RingSpec& spec, const Ideal& ideal) {
  validate_ideal(spec, ideal);
  int below = 0;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    const int gap = spec.chain_length(i) - ideal.levels[i];
    if (gap > 1) return false;
    below += gap;
  }
  return below == 1;
}

bool is_comaximal(const RingSpec& spec, const Ideal& a, const Ideal& b) {
  require_same_spec(spec, a, b);
  if (a == b) {
    throw Error(ErrorKind::kInvalidArgument, "co-maximality is defined for distinct vertices, got " +
                                                 a.to_string() + " twice");
  }
  if (!is_vertex(spec, a) || !is_vertex(spec, b)) {
    throw Error(ErrorKind::kInvalidArgument, "co-maximality test needs two vertices of the graph");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::max(a.levels[i], b.levels[i]) != spec.chain_length(i)) return false;
  }
  return true;
}

int nzc(const Ideal& ideal) {
  return static_cast<int>(std::count_if(ideal.levels.begin(), ideal.levels.end(), [](int l) { return l > 0; }));
}

NilClass nil_class(const RingSpec& spec, const Ideal& ideal) {
  validate_ideal(spec, ideal);
  NilClass out{std::vector<bool>(ideal.size())};
  for (std::size_t i = 0; i < ideal.size(); ++i) out.mask[i] = ideal.levels[i] == spec.chain_length(i);
  return out;
}

Ideal prime_reduction(const RingSpec& spec, const Ideal& ideal) {
  validate_ideal(spec, ideal);
  Ideal out{ideal.levels};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out.levels[i] != spec.chain_length(i)) out.levels[i] = 0;
  }
  return out;
}

}  // namespace comaxdim
