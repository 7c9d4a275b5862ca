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

#include <iosfwd>
#include <string_view>
#include <vector>

#include "comaxdim/errors.hpp"
#include "comaxdim/ring_model.hpp"

namespace comaxdim::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kParseError = 3,
  kEmptyGraph = 4,
  kCapExceeded = 5,
  kDisconnected = 6,
  kIoError = 7,
};

int exit_code_for(ErrorKind kind);

/// Family syntax for `sweep --family`:
///   reduced:A..B          products of A..B fields
///   nonreduced:S1;S2;...  ring specs with no field components
///   mixed:S1;S2;...       ring specs with both kinds of component
///   specs:S1;S2;...       any ring specs
///   file:PATH             one ring spec per line, '#' starts a comment
/// Throws Error(kParse) on bad syntax and Error(kIo) on unreadable files.
std::vector<RingSpec> parse_family(std::string_view text);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace comaxdim::cli
