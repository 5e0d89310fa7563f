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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tameconv/integer.hpp"

namespace tameconv {

std::int64_t euler_phi(std::int64_t m);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Prime factorization as (prime, exponent) pairs in ascending prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m);
/// Positive divisors in ascending order.
std::vector<std::int64_t> divisors(std::int64_t m);
bool is_prime(std::int64_t n);

/// Ascending coefficients of the m-th cyclotomic polynomial (monic, degree
/// phi(m)). Cached process-wide; the returned span stays valid forever.
std::span<const std::int64_t> cyclotomic_polynomial(int m);

/// Element of Z[zeta_m], stored in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
///
/// Binary operations on operands of different conductors first embed both into
/// the lcm conductor. The conductor is never lowered implicitly; use
/// minimized() to obtain the representative at the smallest conductor.
class CycInt {
 public:
  CycInt();  // zero at conductor 1

  static CycInt zero(int m);
  static CycInt from_integer(const Integer& c, int m = 1);
  static CycInt root_of_unity(int m, std::int64_t k);
  /// Throws std::invalid_argument unless coeffs.size() == phi(m).
  static CycInt from_coeffs(int m, std::vector<Integer> coeffs);
  /// sum_k counts[k] zeta_m^k with counts.size() == m.
  static CycInt from_exponent_counts(int m, std::span<const std::int64_t> counts);
  static CycInt from_exponent_counts(int m, std::vector<Integer> counts);

  int conductor() const { return m_; }
  const std::vector<Integer>& coeffs() const { return c_; }

  bool is_zero() const;
  /// The value as a rational integer, if it is one.
  std::optional<Integer> as_integer() const;
  /// gcd of all coefficients (0 for the zero element).
  Integer content() const;

  /// Image in Z[zeta_M]; requires m | M.
  CycInt embed(int M) const;
  /// Preimage in Z[zeta_d] (d | m) if this element lies in that subring.
  std::optional<CycInt> project(int d) const;
  /// Same value at the smallest conductor that contains it.
  CycInt minimized() const;

  /// zeta -> zeta^{-1}.
  CycInt conj() const;
  /// zeta -> zeta^a; throws std::invalid_argument unless gcd(a, m) = 1.
  CycInt galois(std::int64_t a) const;
  /// x * conj(x).
  CycInt abs_squared() const;

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& operator*=(const Integer& s);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(CycInt a, const Integer& s) { return a *= s; }

  /// Divides every coefficient by d, which must divide the content.
  CycInt divexact(const Integer& d) const;

  friend bool operator==(const CycInt& a, const CycInt& b);

  /// Human-readable polynomial in z, e.g. "1 + 2*z^3 [m=5]".
  std::string to_string() const;

 private:
  CycInt(int m, std::vector<Integer> c) : m_(m), c_(std::move(c)) {}

  int m_ = 1;
  std::vector<Integer> c_;
};

/// A cyclotomic integer divided by a positive rational integer.
///
/// Normalized so that gcd(content(numerator), denominator) = 1; zero is 0/1.
class CycScalar {
 public:
  CycScalar() : den_(1) {}
  CycScalar(CycInt num, Integer den = 1);  // NOLINT(google-explicit-constructor)

  static CycScalar one() { return CycScalar(CycInt::from_integer(1)); }

  const CycInt& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  int conductor() const { return num_.conductor(); }
  bool is_zero() const { return num_.is_zero(); }

  CycScalar embed(int M) const { return CycScalar(num_.embed(M), den_); }
  CycScalar minimized() const { return CycScalar(num_.minimized(), den_); }
  CycScalar conj() const { return CycScalar(num_.conj(), den_); }
  CycScalar galois(std::int64_t a) const { return CycScalar(num_.galois(a), den_); }
  CycScalar abs_squared() const;

  CycScalar operator-() const { return CycScalar(-num_, den_); }
  friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);

  friend bool operator==(const CycScalar& a, const CycScalar& b);

  std::string to_string() const;

 private:
  CycInt num_;
  Integer den_;
};

/// Element of the group ring Z[C_m] in exponent form, sum_k c_k x^k, read in
/// Z[zeta_m] through x -> zeta_m.
///
/// This is the accumulator used by character sums: values are summed root by
/// root and only reduced once. vanishes() decides equality with zero without
/// passing through the power basis, reducing one prime-power axis at a time
/// (O(m * #primes)), which keeps identities at conductors like 99 * 199 cheap.
class RootSum {
 public:
  explicit RootSum(int m);

  int conductor() const { return m_; }
  void add(std::int64_t k, const Integer& c);
  /// this += scale * a * b, where a and b share this conductor.
  void add_product(const RootSum& a, const RootSum& b, const Integer& scale = 1);
  /// this += scale * x for x at a conductor dividing m.
  void add_cycint(const CycInt& x, const Integer& scale = 1);

  std::span<const Integer> counts() const { return c_; }

  CycInt to_cycint() const;
  bool vanishes() const;

 private:
  int m_;
  std::vector<Integer> c_;
};

}  // namespace tameconv
