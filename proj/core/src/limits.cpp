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

#include "comaxdim/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "comaxdim/errors.hpp"

namespace comaxdim {
namespace {

template <typename T>
void override_from_env(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::string_view text(raw);
  T parsed{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
  if (ec != std::errc{} || end != text.data() + text.size() || parsed == 0) {
    throw Error(ErrorKind::kParse, std::string(name) + " must be a positive integer, got '" +
                                       std::string(text) + "'");
  }
  value = parsed;
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  override_from_env("COMAXDIM_ENUM_CAP", limits.enum_cap);
  override_from_env("COMAXDIM_SOLVE_CAP", limits.solve_cap);
  override_from_env("COMAXDIM_BRUTE_CAP", limits.brute_cap);
  return limits;
}

}  // namespace comaxdim
