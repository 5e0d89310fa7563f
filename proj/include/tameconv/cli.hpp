// Copyright 2026 The tameconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Output is exact JSON on `out`; diagnostics go to
// `err`.

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tameconv/finite_field.hpp"

namespace tameconv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification found a counterexample
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "p^f" or a prime power q.
std::pair<int, int> parse_field(const std::string& text);
/// "n:e".
std::pair<int, int> parse_character(const std::string& text);
/// "g^k" (k-th power of the anchor) or an integer: the element encoding in
/// [0, q), or any rational integer over a prime field.
Elem parse_element(const FqField& field, const std::string& text);

}  // namespace tameconv::cli
