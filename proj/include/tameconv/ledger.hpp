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

// Rank, Swan conductor and total dimension bookkeeping for local convolution.
// Swan conductors are inputs here; nothing in this file computes them.

#pragma once

#include <cstdint>

#include "tameconv/tamerep.hpp"

namespace tameconv {

struct LocalInvariants {
  std::int64_t rank = 0;
  std::int64_t swan = 0;

  std::int64_t dimtot() const { return rank + swan; }
};

/// Swan conductor of V1 tensor [-1]^* V2.
struct TwistSwan {
  std::int64_t sw_twist = 0;
};

/// r1 r2 + r1 s2 + r2 s1.
std::int64_t generic_rank(const LocalInvariants& a, const LocalInvariants& b);
/// Rank at the origin, which is the Swan conductor of the twisted product.
std::int64_t rank_at_zero(const TwistSwan& tw);
/// generic_rank - sw_twist. Throws std::invalid_argument when negative.
std::int64_t convolution_rank(const LocalInvariants& a, const LocalInvariants& b,
                              const TwistSwan& tw);
/// s1 s2 + sw_twist.
std::int64_t convolution_swan(const LocalInvariants& a, const LocalInvariants& b,
                              const TwistSwan& tw);
/// convolution_rank + convolution_swan == dimtot(a) dimtot(b).
bool dimtot_check(const LocalInvariants& a, const LocalInvariants& b, const TwistSwan& tw);
/// Milnor number of f1(x) + f2(y) from those of f1 and f2.
std::int64_t milnor_product(std::int64_t mu1, std::int64_t mu2);
/// (rank, 0): tame representations have no Swan conductor.
LocalInvariants derive_invariants(const TameRep& rep);

}  // namespace tameconv
