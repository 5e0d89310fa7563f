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

// Split tame representations: direct sums of rank-one pieces, each a character
// of mu_n (the monodromy eigenline) with a geometric Frobenius scalar.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "tameconv/cyclotomic.hpp"

namespace tameconv {

struct Component {
  int exponent = 0;          // character of mu_n, e mod n
  CycScalar alpha;           // Frobenius scalar on the eigenline, nonzero
  std::int64_t mult = 1;     // >= 1
};

/// A split tame representation at level n.
///
/// Always held in canonical form: exponents reduced mod n, each scalar stored
/// at its smallest conductor, components sorted by (exponent, serialized
/// scalar) with equal entries merged. Two reps describe the same object at the
/// same level iff they compare equal.
class TameRep {
 public:
  /// Throws std::invalid_argument on level < 1, zero scalars or
  /// multiplicities < 1. Exponents are reduced mod level.
  TameRep(int level, std::vector<Component> components);

  /// Level 1, trivial character, scalar 1, multiplicity 1.
  static TameRep unit();

  int level() const { return level_; }
  const std::vector<Component>& components() const { return comps_; }
  std::int64_t rank() const;

  friend bool operator==(const TameRep& a, const TameRep& b);

 private:
  int level_;
  std::vector<Component> comps_;
};

/// Same representation viewed at level N (a multiple of the level).
TameRep raise_level(const TameRep& rep, int N);

/// Tensor product at level lcm(n1, n2).
TameRep tensor(const TameRep& a, const TameRep& b);

/// All scalars set to 1.
TameRep erase_scalars(const TameRep& rep);

/// zeta_order^exponent with gcd(order, exponent) = 1 (1 is {1, 0}).
struct RootOfUnity {
  int order = 1;
  int exponent = 0;

  static RootOfUnity reduced(int n, std::int64_t e);
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Spectrum of the chosen generator of tame inertia, which acts on the
/// component (n, e) by zeta_n^e. Values are multiplicities.
std::map<RootOfUnity, std::int64_t> monodromy_eigenvalues(const TameRep& rep);

/// sum of mult * alpha over the components.
CycScalar frobenius_trace(const TameRep& rep);

}  // namespace tameconv
