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

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "tameconv/cyclotomic.hpp"

namespace tameconv {

/// A field element of F_q, encoded as sum_i c_i p^i where c_i are the
/// coefficients of its polynomial representative modulo the field modulus.
/// "Smallest" anywhere in this library refers to the order of this encoding.
using Elem = std::uint32_t;

/// Which primitive element the discrete-log tables are built on.
///
/// The identification of mu_n(F_q) with Z/n never depends on this choice: it is
/// anchored at the smallest primitive element (see FqField::anchor), so every
/// character value is identical for both choices.
enum class GeneratorChoice { kSmallest, kLargest };

/// Largest q accepted by FqField::create. Defaults to 2^16; overridden by the
/// TAMECONV_MAX_Q environment variable.
std::uint64_t enumeration_bound();

/// The finite field F_q, q = p^f, with full log/exp/Zech/trace tables.
///
/// Immutable after construction; copies share the tables.
class FqField {
 public:
  /// Throws std::invalid_argument if p is not prime, f < 1 or q exceeds the
  /// bound.
  static FqField create(int p, int f, GeneratorChoice choice = GeneratorChoice::kSmallest);
  static FqField create(int p, int f, GeneratorChoice choice, std::uint64_t max_q);

  int p() const;
  int f() const;
  std::uint32_t q() const;
  /// Ascending coefficients of the monic irreducible modulus (length f + 1).
  std::span<const int> modulus() const;
  GeneratorChoice generator_choice() const;
  /// Primitive element the log tables are built on; log(generator()) == 1 mod q - 1.
  Elem generator() const;
  /// Smallest primitive element; fixes mu_n(F_q) ~ Z/n for every n | q - 1.
  Elem anchor() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Image of the rational integer c in the prime field.
  Elem from_int(std::int64_t c) const;
  std::vector<int> digits(Elem x) const;
  Elem from_digits(std::span<const int> d) const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// Discrete log with respect to generator(); throws on 0.
  std::uint32_t log(Elem x) const;
  Elem exp(std::uint64_t k) const;
  /// Discrete log with respect to anchor(); throws on 0.
  std::uint32_t anchored_log(Elem x) const;
  /// k with x^{(q-1)/n} = omega_n^k, where omega_n = anchor()^{(q-1)/n}.
  /// Requires x != 0 and n | q - 1.
  std::uint32_t mu_index(Elem x, std::uint32_t n) const;
  /// Absolute trace to F_p, as an integer in [0, p).
  int trace(Elem x) const;

  /// Table of the embedding of this field into ext (same p, f | ext.f()),
  /// sending the field generator x to the smallest root of the modulus in ext.
  std::vector<Elem> embedding_into(const FqField& ext) const;

  friend bool operator==(const FqField& a, const FqField& b) { return a.impl_ == b.impl_; }

 private:
  struct Impl;
  explicit FqField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// A character of mu_n, chi(zeta_n) = zeta_n^e, read on F_q^* through
/// t -> t^{(q-1)/n}.
class MulChar {
 public:
  /// Throws std::invalid_argument unless n >= 1 and n | q - 1. The exponent is
  /// reduced modulo n.
  MulChar(FqField field, int order, std::int64_t exponent);

  static MulChar trivial(const FqField& field) { return MulChar(field, 1, 0); }

  const FqField& field() const { return field_; }
  int order() const { return n_; }
  int exponent() const { return e_; }
  bool is_trivial() const { return e_ == 0; }

  MulChar inverse() const { return MulChar(field_, n_, n_ - e_); }
  /// Same character at its exact order (n / gcd(n, e)).
  MulChar reduced() const;
  /// Same character viewed at level N, n | N | q - 1.
  MulChar at_level(int N) const;

  /// e * k mod n for x = omega^k-coset; the exponent of chi(x) as a power of
  /// zeta_n. Throws on x == 0.
  int exponent_at(Elem x) const;

  /// Pointwise product at level lcm of the two orders.
  friend MulChar operator*(const MulChar& a, const MulChar& b);
  /// Equality as functions on F_q^*.
  friend bool operator==(const MulChar& a, const MulChar& b);

 private:
  FqField field_;
  int n_;
  int e_;
};

/// chi(x) as a root of unity in Z[zeta_n]. Throws std::invalid_argument on 0.
CycInt char_eval(const MulChar& chi, Elem x);

/// Tr(c x) in [0, p), the exponent of psi_c(x) as a power of zeta_p.
int add_char_exponent(const FqField& field, Elem x, Elem c);
/// psi_c(x) = zeta_p^{Tr(c x)}; c = 1 is the standard character. Throws on c = 0.
CycInt add_char_eval(const FqField& field, Elem x, Elem c);

}  // namespace tameconv
