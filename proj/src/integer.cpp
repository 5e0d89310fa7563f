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

#include "tameconv/integer.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

static_assert(sizeof(long) == sizeof(std::int64_t),
              "GMP si/ui conversions assume an LP64 platform");

namespace tameconv {
namespace {

mpz_class to_big(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Integer::Integer(const mpz_class& v) : v_(v) { normalize(); }

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) {
    throw std::invalid_argument("malformed integer literal: " + s);
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("malformed integer literal: " + s);
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  mpz_class v;
  if (v.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed integer literal: " + s);
  }
  return Integer(v);
}

void Integer::normalize() {
  if (auto* big = std::get_if<mpz_class>(&v_)) {
    if (mpz_fits_slong_p(big->get_mpz_t())) {
      v_ = static_cast<std::int64_t>(mpz_get_si(big->get_mpz_t()));
    }
  }
}

std::optional<std::int64_t> Integer::to_int64() const {
  if (is_small()) return small();
  return std::nullopt;
}

mpz_class Integer::to_mpz() const {
  if (is_small()) return to_big(small());
  return std::get<mpz_class>(v_);
}

int Integer::sign() const {
  if (is_small()) return (small() > 0) - (small() < 0);
  return sgn(std::get<mpz_class>(v_));
}

Integer Integer::operator-() const {
  if (is_small() && small() != std::numeric_limits<std::int64_t>::min()) {
    return Integer(-small());
  }
  return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_add_overflow(small(), o.small(), &r)) {
      v_ = r;
      return *this;
    }
  }
  v_ = mpz_class(to_mpz() + o.to_mpz());
  normalize();
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small(), o.small(), &r)) {
      v_ = r;
      return *this;
    }
  }
  v_ = mpz_class(to_mpz() - o.to_mpz());
  normalize();
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small(), o.small(), &r)) {
      v_ = r;
      return *this;
    }
  }
  v_ = mpz_class(to_mpz() * o.to_mpz());
  normalize();
  return *this;
}

void Integer::add_mul(const Integer& a, const Integer& b) {
  if (is_small() && a.is_small() && b.is_small()) {
    std::int64_t prod;
    std::int64_t sum;
    if (!__builtin_mul_overflow(a.small(), b.small(), &prod) &&
        !__builtin_add_overflow(small(), prod, &sum)) {
      v_ = sum;
      return;
    }
  }
  mpz_class acc = to_mpz();
  mpz_addmul(acc.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  v_ = std::move(acc);
  normalize();
}

Integer Integer::divexact(const Integer& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (is_small() && d.is_small() &&
      !(small() == std::numeric_limits<std::int64_t>::min() && d.small() == -1)) {
    return Integer(small() / d.small());
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer Integer::quot(const Integer& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (is_small() && d.is_small() &&
      !(small() == std::numeric_limits<std::int64_t>::min() && d.small() == -1)) {
    return Integer(small() / d.small());
  }
  mpz_class r;
  mpz_tdiv_q(r.get_mpz_t(), to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer Integer::rem(const Integer& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (is_small() && d.is_small()) {
    if (d.small() == -1) return Integer(0);
    return Integer(small() % d.small());
  }
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() &&
      a.small() != std::numeric_limits<std::int64_t>::min() &&
      b.small() != std::numeric_limits<std::int64_t>::min()) {
    return Integer(std::gcd(a.small(), b.small()));
  }
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

bool operator==(const Integer& a, const Integer& b) {
  // Normalization guarantees small values are never boxed.
  if (a.is_small() != b.is_small()) return false;
  if (a.is_small()) return a.small() == b.small();
  return std::get<mpz_class>(a.v_) == std::get<mpz_class>(b.v_);
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small() <=> b.small();
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Integer::to_string() const {
  if (is_small()) return std::to_string(small());
  return std::get<mpz_class>(v_).get_str(10);
}

}  // namespace tameconv
