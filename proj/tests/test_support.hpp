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

// Small deterministic generators and numeric oracles shared by the unit tests.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "tameconv/cyclotomic.hpp"

namespace tameconv::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  CycInt cycint(int m, std::int64_t bound = 5) {
    std::vector<Integer> c;
    for (std::int64_t i = 0; i < euler_phi(m); ++i) c.emplace_back(range(-bound, bound));
    return CycInt::from_coeffs(m, std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Complex embedding zeta_m -> exp(2 pi i / m), an independent numeric check of
// the power-basis reduction.
inline std::complex<double> numeric_value(const CycInt& x) {
  const double two_pi = 2.0 * std::acos(-1.0);
  std::complex<double> z = std::polar(1.0, two_pi / x.conductor());
  std::complex<double> acc = 0;
  std::complex<double> pw = 1;
  for (const Integer& c : x.coeffs()) {
    acc += static_cast<double>(*c.to_int64()) * pw;
    pw *= z;
  }
  return acc;
}

}  // namespace tameconv::testing
