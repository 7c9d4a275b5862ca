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
#include <cstdint>

namespace comaxdim {

/// Size guards. Exceeding any of them raises ErrorKind::kCapExceeded;
/// nothing is ever approximated.
struct Limits {
  /// Maximum number of ideals enumerated for one ring.
  std::uint64_t enum_cap = std::uint64_t{1} << 20;
  /// Maximum order of a graph handed to the exact independent-set solver.
  std::size_t solve_cap = 300;
  /// Maximum order of a graph handed to the brute-force oracles.
  std::size_t brute_cap = 30;

  /// Defaults overridden by COMAXDIM_ENUM_CAP, COMAXDIM_SOLVE_CAP and
  /// COMAXDIM_BRUTE_CAP when set. Malformed values throw kParse.
  static Limits from_environment();
};

}  // namespace comaxdim
