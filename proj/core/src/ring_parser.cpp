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

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "comaxdim/errors.hpp"
#include "comaxdim/ring_model.hpp"

namespace comaxdim {
namespace {

[[noreturn]] void fail(std::string_view token, const std::string& why) {
  throw Error(ErrorKind::kParse, "bad ring component '" + std::string(token) + "': " + why);
}

std::uint64_t parse_positive(std::string_view digits, std::string_view token) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
    fail(token, "expected an integer, got '" + std::string(digits) + "'");
  }
  return value;
}

// Exponent k with n = p^k for a prime p, or 0 if n is not a prime power.
int prime_power_exponent(std::uint64_t n) {
  if (n < 2) return 0;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return 1;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : 0;
}

int to_chain_length(std::uint64_t value, std::string_view token) {
  if (value < 1) fail(token, "chain length must be >= 1");
  if (value > 64) fail(token, "chain length " + std::to_string(value) + " is unreasonably large");
  return static_cast<int>(value);
}

ChainComponent parse_atom(std::string_view atom, std::string_view original,
                          std::vector<std::string>* warnings) {
  if (atom.empty()) fail(original, "empty factor");
  const char head = atom.front();
  std::string_view rest = atom.substr(1);

  if (head == 'f') {
    if (rest.empty()) return {1, std::string(original)};
    if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') fail(original, "expected F or F(q)");
    const std::uint64_t q = parse_positive(rest.substr(1, rest.size() - 2), original);
    if (prime_power_exponent(q) == 0) fail(original, "field order must be a prime power");
    if (warnings != nullptr) {
      warnings->push_back("field order in '" + std::string(original) +
                          "' is ignored: every field has ideal lattice {0, F}");
    }
    return {1, std::string(original)};
  }
  if (head == 'c') {
    return {to_chain_length(parse_positive(rest, original), original), std::string(original)};
  }
  if (head == 'z') {
    if (const auto caret = rest.find('^'); caret != std::string_view::npos) {
      const std::uint64_t p = parse_positive(rest.substr(0, caret), original);
      if (p < 2) fail(original, "base must be >= 2");
      return {to_chain_length(parse_positive(rest.substr(caret + 1), original), original),
              std::string(original)};
    }
    const std::uint64_t n = parse_positive(rest, original);
    const int k = prime_power_exponent(n);
    if (k == 0) {
      fail(original, "Z" + std::to_string(n) + " is not local; write it as a product of prime-power factors");
    }
    return {to_chain_length(static_cast<std::uint64_t>(k), original), std::string(original)};
  }
  fail(original, "expected F, F(q), Ck, Zp^k or Zn");
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text, std::vector<std::string>* warnings) {
  // Normalize: drop whitespace, lowercase, map U+00D7 to 'x'.
  std::string normalized;
  std::vector<std::string> originals(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == 0xC3 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x97) {
      normalized += 'x';
      originals.emplace_back();
      ++i;
      continue;
    }
    if (std::isspace(c) != 0) continue;
    const char lower = static_cast<char>(std::tolower(c));
    normalized += lower;
    if (lower == 'x') {
      originals.emplace_back();
    } else {
      originals.back() += static_cast<char>(c);
    }
  }
  if (normalized.empty()) throw Error(ErrorKind::kParse, "empty ring spec");

  std::vector<ChainComponent> components;
  std::size_t start = 0;
  std::size_t index = 0;
  while (true) {
    const std::size_t sep = normalized.find('x', start);
    const std::string_view atom =
        std::string_view(normalized).substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    components.push_back(parse_atom(atom, originals[index], warnings));
    if (sep == std::string::npos) break;
    start = sep + 1;
    ++index;
  }
  return RingSpec(std::move(components));
}

}  // namespace comaxdim
