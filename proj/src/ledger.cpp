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

#include "tameconv/ledger.hpp"

#include <stdexcept>
#include <string>

namespace tameconv {

std::int64_t generic_rank(const LocalInvariants& a, const LocalInvariants& b) {
  return a.rank * b.rank + a.rank * b.swan + b.rank * a.swan;
}

std::int64_t rank_at_zero(const TwistSwan& tw) { return tw.sw_twist; }

std::int64_t convolution_rank(const LocalInvariants& a, const LocalInvariants& b,
                              const TwistSwan& tw) {
  std::int64_t r = generic_rank(a, b) - tw.sw_twist;
  if (r < 0) {
    throw std::invalid_argument("inconsistent invariants: convolution rank would be " +
                                std::to_string(r));
  }
  return r;
}

std::int64_t convolution_swan(const LocalInvariants& a, const LocalInvariants& b,
                              const TwistSwan& tw) {
  return a.swan * b.swan + tw.sw_twist;
}

bool dimtot_check(const LocalInvariants& a, const LocalInvariants& b, const TwistSwan& tw) {
  return convolution_rank(a, b, tw) + convolution_swan(a, b, tw) == a.dimtot() * b.dimtot();
}

std::int64_t milnor_product(std::int64_t mu1, std::int64_t mu2) { return mu1 * mu2; }

LocalInvariants derive_invariants(const TameRep& rep) { return LocalInvariants{rep.rank(), 0}; }

}  // namespace tameconv
