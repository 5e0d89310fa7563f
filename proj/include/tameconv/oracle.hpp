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

// Point counts on y1^n1 + y2^n2 = t, y1 y2 != 0, over F_{q^m}, and their
// reconciliation with character sums.
//
// Substituting u = t a in the inner sum gives
//
//   S(chi1, chi2; t) = sum_{u + v = t, uv != 0} chi1(u) chi2(v)
//                    = (chi1 chi2)(t) * (-J(chi1^{-1}, chi2^{-1})),
//
// which ties the count back to the Jacobi sums used by the convolution engine.
// On the cyclic group F_{q^m}^*, y -> y^n has the same fibers as y -> y^d with
// d = gcd(n, q^m - 1), so the expansion runs over the characters of mu_d.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tameconv/cyclotomic.hpp"
#include "tameconv/finite_field.hpp"

namespace tameconv {

struct CurveSpec {
  FqField base;
  int n1 = 1;
  int n2 = 1;
  Elem t = 1;  // nonzero element of the base field
  int m = 1;   // extension degree
};

struct InnerSum {
  int e1;
  int e2;
  CycInt value;       // S(chi_e1, chi_e2; t), characters of mu_d1 and mu_d2
  bool bridge_holds;  // value == (chi1 chi2)(t) * (-J(chi1^{-1}, chi2^{-1}))
};

struct PointCountCheck {
  std::int64_t count = 0;
  CycInt expansion;
  std::vector<InnerSum> terms;
  bool holds = false;
};

/// Throws std::invalid_argument on t = 0, n_i < 1, n_i divisible by p, m < 1
/// or q^m over the enumeration bound.
void validate(const CurveSpec& spec);

/// Extension field F_{q^m} and the image of t in it.
FqField extension_field(const CurveSpec& spec);
Elem embedded_t(const CurveSpec& spec, const FqField& ext);

std::int64_t count_points(const CurveSpec& spec);

/// (gcd(n1, q^m - 1), gcd(n2, q^m - 1)).
std::pair<int, int> effective_orders(const CurveSpec& spec);

/// sum over all character pairs of S(chi1, chi2; t), with the per-pair terms.
/// Throws std::invalid_argument unless n1 and n2 divide q^m - 1.
CycInt character_expansion(const CurveSpec& spec, std::vector<InnerSum>* terms = nullptr);

/// Count against the expansion over the characters of mu_d1 x mu_d2, which
/// coincides with character_expansion whenever the latter is defined.
PointCountCheck verify_point_count(const CurveSpec& spec);

/// The same computations for many t with fixed (q, n1, n2, m): the extension
/// field, the embedding and the Jacobi sums are prepared once. Inner sums are
/// contracted from one enumeration of the line u + v = t per call.
class PointOracle {
 public:
  PointOracle(FqField base, int n1, int n2, int m);

  const FqField& extension() const { return ext_; }
  int d1() const { return d1_; }
  int d2() const { return d2_; }

  std::int64_t count(Elem t) const;
  PointCountCheck verify(Elem t) const;

 private:
  CurveSpec spec_;
  FqField ext_;
  std::vector<Elem> embed_;
  int d1_;
  int d2_;
  int r_;  // lcm(d1, d2)
  std::vector<CycInt> jacobi_;  // J(chi_e1^{-1}, chi_e2^{-1}), row-major
};

}  // namespace tameconv
