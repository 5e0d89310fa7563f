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

// JSON encodings. Integers that fit in 64 bits are JSON numbers; larger ones
// are decimal strings. Readers accept both and reject unknown keys.
//
//   CycInt     {"m": 5, "coeffs": [1, 0, 2, 0]}     ascending power basis
//   CycScalar  {"num": CycInt, "den": 3}
//   TameRep    {"level": n, "components": [{"e": 1, "alpha": CycScalar, "mult": 1}]}

#pragma once

#include <json.hpp>

#include "tameconv/cyclotomic.hpp"
#include "tameconv/tamerep.hpp"

namespace tameconv {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const CycInt& x);
Json to_json(const CycScalar& x);
Json to_json(const TameRep& rep);
Json to_json(const RootOfUnity& z);

/// Readers throw std::invalid_argument with a description of the first
/// offending field.
Integer integer_from_json(const Json& j);
CycInt cycint_from_json(const Json& j);
/// Also accepts a bare integer as shorthand for an integer scalar.
CycScalar scalar_from_json(const Json& j);
TameRep tamerep_from_json(const Json& j);

/// Compact serialization used as the canonical sort key.
std::string canonical_string(const CycScalar& x);

}  // namespace tameconv
