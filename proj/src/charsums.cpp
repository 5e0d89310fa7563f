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

#include "tameconv/charsums.hpp"

#include <stdexcept>

#include "tameconv/kernels.hpp"

namespace tameconv {
namespace {

RootSum from_histogram(const kernels::Histogram& h) {
  RootSum s(static_cast<int>(h.size()));
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] != 0) s.add(static_cast<std::int64_t>(k), h[k]);
  }
  return s;
}

}  // namespace

const char* to_string(CheckOutcome c) {
  switch (c) {
    case CheckOutcome::kHolds:
      return "holds";
    case CheckOutcome::kFails:
      return "fails";
    case CheckOutcome::kNotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

JacobiKey JacobiKey::make(const MulChar& chi1, const MulChar& chi2) {
  if (!(chi1.field() == chi2.field())) {
    throw std::invalid_argument("Jacobi sum of characters over different fields");
  }
  int r = static_cast<int>(lcm64(chi1.order(), chi2.order()));
  return JacobiKey{chi1, chi2, r, r / chi1.order(), r / chi2.order()};
}

CycInt jacobi_sum(const JacobiKey& key) {
  auto h = kernels::serial::jacobi_histogram(key.field(), key.chi1.order(), key.chi1.exponent(),
                                             key.chi2.order(), key.chi2.exponent(), key.r);
  for (auto& c : h) c = -c;
  return CycInt::from_exponent_counts(key.r, h);
}

CycInt gauss_sum(const MulChar& chi, Elem c) {
  const FqField& k = chi.field();
  int L = static_cast<int>(lcm64(chi.order(), k.p()));
  auto h = kernels::serial::gauss_histogram(k, chi.order(), chi.exponent(), c, L);
  return CycInt::from_exponent_counts(L, h);
}

CycScalar frobenius_twist(const FqField& field, const CycInt& jacobi) {
  auto abs2 = jacobi.abs_squared().as_integer();
  if (!abs2 || abs2->is_zero()) {
    throw std::logic_error("|J|^2 is not a nonzero rational integer: " + jacobi.to_string());
  }
  return CycScalar(jacobi.conj() * Integer(static_cast<std::int64_t>(field.q())), *abs2);
}

CycScalar frobenius_twist(const JacobiKey& key) {
  if (key.chi1.is_trivial() || key.chi2.is_trivial()) {
    throw std::invalid_argument("Frobenius twist needs two nontrivial characters");
  }
  return frobenius_twist(key.field(), jacobi_sum(key));
}

CheckOutcome check_gauss_jacobi(const JacobiKey& key, Elem c) {
  const MulChar prod = key.chi1 * key.chi2;
  if (key.chi1.is_trivial() || key.chi2.is_trivial() || prod.is_trivial()) {
    return CheckOutcome::kNotApplicable;
  }
  const FqField& k = key.field();
  const int L = static_cast<int>(lcm64(key.r, k.p()));

  auto jh = kernels::serial::jacobi_histogram(k, key.chi1.order(), key.chi1.exponent(),
                                              key.chi2.order(), key.chi2.exponent(), key.r);
  // jh counts the terms of the inner sum, so J = -sum_k jh[k] zeta_r^k.
  auto abs2 = CycInt::from_exponent_counts(key.r, jh).abs_squared().as_integer();
  if (!abs2) throw std::logic_error("|J|^2 is not a rational integer");

  RootSum conj_j(L);
  for (std::size_t i = 0; i < jh.size(); ++i) {
    if (jh[i] != 0) conj_j.add(-static_cast<std::int64_t>(i) * (L / key.r), -jh[i]);
  }
  auto gauss = [&](const MulChar& chi) {
    return from_histogram(kernels::serial::gauss_histogram(k, chi.order(), chi.exponent(), c, L));
  };
  RootSum g1 = gauss(key.chi1);
  RootSum g2 = gauss(key.chi2);
  RootSum g12 = gauss(prod);

  // With g = -G: (q / J) g12 = g1 g2  <=>  q conj(J) G12 + |J|^2 G1 G2 = 0.
  RootSum acc(L);
  acc.add_product(conj_j, g12, Integer(static_cast<std::int64_t>(k.q())));
  acc.add_product(g1, g2, *abs2);
  return acc.vanishes() ? CheckOutcome::kHolds : CheckOutcome::kFails;
}

CheckOutcome check_associativity(const MulChar& chi1, const MulChar& chi2, const MulChar& chi3) {
  const MulChar c12 = chi1 * chi2;
  const MulChar c23 = chi2 * chi3;
  if (chi1.is_trivial() || chi2.is_trivial() || chi3.is_trivial() || c12.is_trivial() ||
      c23.is_trivial()) {
    return CheckOutcome::kNotApplicable;
  }
  auto jac = [](const MulChar& a, const MulChar& b) {
    return jacobi_sum(JacobiKey::make(a.reduced(), b.reduced()));
  };
  CycInt lhs = jac(c12, chi3) * jac(chi1, chi2);
  CycInt rhs = jac(chi1, c23) * jac(chi2, chi3);
  return lhs == rhs ? CheckOutcome::kHolds : CheckOutcome::kFails;
}

}  // namespace tameconv
