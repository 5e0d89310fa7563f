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

// Gauss and Jacobi sums over F_q.
//
// Jacobi sums follow the sign convention of the convolution twist:
//
//   J(chi1, chi2) = - sum_{t1 + t2 = 1, t1 t2 != 0} chi1^{-1}(t1) chi2^{-1}(t2),
//
// which is minus the complex conjugate of the classical sum. With it, the
// geometric Frobenius on the convolution of two Kummer lines acts by q / J.

#pragma once

#include "tameconv/cyclotomic.hpp"
#include "tameconv/finite_field.hpp"

namespace tameconv {

enum class CheckOutcome { kHolds, kFails, kNotApplicable };

const char* to_string(CheckOutcome c);

/// A pair of characters together with their common level r = lcm(n1, n2) and
/// the scalings a_i = r / n_i that carry each into mu_r.
struct JacobiKey {
  MulChar chi1;
  MulChar chi2;
  int r;
  int a1;
  int a2;

  /// Throws std::invalid_argument if the characters live on different fields.
  static JacobiKey make(const MulChar& chi1, const MulChar& chi2);
  const FqField& field() const { return chi1.field(); }
};

/// The Jacobi sum above, at conductor r.
CycInt jacobi_sum(const JacobiKey& key);

/// sum_{x != 0} chi(x) psi(c x) at conductor lcm(n, p); c = 1 is the standard
/// additive character. Trivial chi gives -1.
CycInt gauss_sum(const MulChar& chi, Elem c = 1);

/// q / J(chi1, chi2) as q * conj(J) / |J|^2. Throws std::invalid_argument if
/// either character is trivial, std::logic_error if |J|^2 is not rational.
CycScalar frobenius_twist(const JacobiKey& key);
/// Same, from an already computed J.
CycScalar frobenius_twist(const FqField& field, const CycInt& jacobi);

/// (q / J) g(chi1 chi2) = g(chi1) g(chi2) for g = -gauss_sum, checked after
/// clearing the denominator. Not applicable unless chi1, chi2 and chi1 chi2
/// are all nontrivial.
CheckOutcome check_gauss_jacobi(const JacobiKey& key, Elem c = 1);

/// J(chi1 chi2, chi3) J(chi1, chi2) = J(chi1, chi2 chi3) J(chi2, chi3). Not
/// applicable unless chi1, chi2, chi3, chi1 chi2 and chi2 chi3 are nontrivial.
CheckOutcome check_associativity(const MulChar& chi1, const MulChar& chi2, const MulChar& chi3);

}  // namespace tameconv
