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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

namespace tameconv {

/// Arbitrary precision integer with an inline 64-bit fast path.
///
/// Values that fit in int64_t are stored unboxed; every operation first tries
/// the machine-word path with overflow detection and only falls back to GMP
/// when the result does not fit. Results are always demoted back to the small
/// representation when possible, so two equal values have the same
/// representation.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : v_(static_cast<std::int64_t>(v)) {}  // NOLINT
  explicit Integer(const mpz_class& v);

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  bool is_small() const { return std::holds_alternative<std::int64_t>(v_); }
  /// Only valid when is_small().
  std::int64_t small() const { return std::get<std::int64_t>(v_); }
  std::optional<std::int64_t> to_int64() const;
  mpz_class to_mpz() const;

  int sign() const;
  bool is_zero() const { return is_small() && small() == 0; }
  bool is_one() const { return is_small() && small() == 1; }

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  /// this += a * b.
  void add_mul(const Integer& a, const Integer& b);

  /// Exact division; the caller guarantees d divides *this.
  Integer divexact(const Integer& d) const;
  /// Truncated quotient and remainder.
  Integer quot(const Integer& d) const;
  Integer rem(const Integer& d) const;

  friend Integer gcd(const Integer& a, const Integer& b);
  friend Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Integer& x) {
    return os << x.to_string();
  }

 private:
  void normalize();

  std::variant<std::int64_t, mpz_class> v_{std::int64_t{0}};
};

}  // namespace tameconv
