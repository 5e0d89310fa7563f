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

#include "tameconv/finite_field.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace tameconv {

namespace {

constexpr std::uint64_t kDefaultBound = 65536;
constexpr std::uint32_t kNoLog = 0xffffffffu;

// Dense polynomials over F_p, ascending coefficients, used only while the
// tables are being built.
using Poly = std::vector<int>;

// Remainder of a modulo the monic polynomial m; trailing zeros are kept so the
// result has exactly deg(m) coefficients.
Poly poly_mod(Poly a, const Poly& m, int p) {
  const std::size_t d = m.size() - 1;
  for (std::size_t i = a.size(); i-- > d;) {
    int c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) {
      a[i - d + j] = static_cast<int>((a[i - d + j] + static_cast<std::int64_t>(p - c) * m[j]) % p);
    }
  }
  a.resize(d, 0);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<int>((r[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

bool divides(const Poly& d, const Poly& a, int p) {
  Poly r = poly_mod(a, d, p);
  for (int c : r) {
    if (c != 0) return false;
  }
  return true;
}

Poly digits_of(std::uint64_t x, int p, int len) {
  Poly d(len, 0);
  for (int i = 0; i < len; ++i) {
    d[i] = static_cast<int>(x % p);
    x /= p;
  }
  return d;
}

std::uint64_t encode(const Poly& d, int p) {
  std::uint64_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

// Smallest monic irreducible of degree f by encoding of its lower
// coefficients; trial division by every monic polynomial of degree <= f / 2.
Poly find_modulus(int p, int f) {
  if (f == 1) return {0, 1};
  std::uint64_t count = 1;
  for (int i = 0; i < f; ++i) count *= p;
  for (std::uint64_t lower = 0; lower < count; ++lower) {
    Poly m = digits_of(lower, p, f);
    if (m[0] == 0) continue;
    m.push_back(1);
    bool irreducible = true;
    for (int d = 1; d <= f / 2 && irreducible; ++d) {
      std::uint64_t nd = 1;
      for (int i = 0; i < d; ++i) nd *= p;
      for (std::uint64_t low = 0; low < nd; ++low) {
        Poly g = digits_of(low, p, d);
        g.push_back(1);
        if (divides(g, m, p)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t g = static_cast<std::int64_t>(m), x = 0, x1 = 1;
  std::int64_t b = static_cast<std::int64_t>(a % m);
  while (b != 0) {
    std::int64_t t = g / b;
    std::tie(g, b) = std::make_tuple(b, g - t * b);
    std::tie(x, x1) = std::make_tuple(x1, x - t * x1);
  }
  if (g != 1) throw std::logic_error("not invertible");
  std::int64_t mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((x % mm) + mm) % mm);
}

}  // namespace

std::uint64_t enumeration_bound() {
  if (const char* env = std::getenv("TAMECONV_MAX_Q")) {
    try {
      std::size_t used = 0;
      std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size() && v >= 2) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultBound;
}

struct FqField::Impl {
  int p = 0;
  int f = 0;
  std::uint32_t q = 0;
  Poly modulus;
  GeneratorChoice choice = GeneratorChoice::kSmallest;
  Elem gen = 0;
  Elem anchor = 0;
  std::uint64_t anchor_log_inv = 0;  // inverse of log(anchor) mod q - 1
  std::vector<Elem> exp;             // length 2(q - 1) to skip a reduction in mul
  std::vector<std::uint32_t> log;    // log[0] = kNoLog
  std::vector<int> trace;

  Elem add(Elem a, Elem b) const {
    if (f == 1) {
      std::uint32_t s = a + b;
      return s >= q ? s - q : s;
    }
    if (p == 2) return a ^ b;
    Elem r = 0;
    std::uint32_t pw = 1;
    while (a != 0 || b != 0) {
      std::uint32_t s = a % p + b % p;
      if (s >= static_cast<std::uint32_t>(p)) s -= p;
      r += s * pw;
      pw *= p;
      a /= p;
      b /= p;
    }
    return r;
  }

  Elem neg(Elem a) const {
    if (f == 1) return a == 0 ? 0 : q - a;
    if (p == 2) return a;
    Elem r = 0;
    std::uint32_t pw = 1;
    while (a != 0) {
      std::uint32_t d = a % p;
      if (d != 0) r += (p - d) * pw;
      pw *= p;
      a /= p;
    }
    return r;
  }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp[log[a] + log[b]];
  }
};

FqField FqField::create(int p, int f, GeneratorChoice choice) {
  return create(p, f, choice, enumeration_bound());
}

FqField FqField::create(int p, int f, GeneratorChoice choice, std::uint64_t max_q) {
  if (p < 2 || !is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (f < 1) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (int i = 0; i < f; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > max_q || q > (std::uint64_t{1} << 31)) {
      throw std::invalid_argument("field size " + std::to_string(p) + "^" + std::to_string(f) +
                                  " exceeds the enumeration bound " + std::to_string(max_q));
    }
  }

  static std::mutex mu;
  static std::map<std::tuple<int, int, GeneratorChoice>, std::shared_ptr<const Impl>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, f, choice});
    if (it != cache.end()) return FqField(it->second);
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->f = f;
  impl->q = static_cast<std::uint32_t>(q);
  impl->choice = choice;
  impl->modulus = find_modulus(p, f);
  const Poly& mod = impl->modulus;
  const std::uint64_t order = q - 1;

  auto pow_poly = [&](Poly base, std::uint64_t e) {
    Poly r(f, 0);
    r[0] = 1;
    while (e != 0) {
      if (e & 1) r = poly_mulmod(r, base, mod, p);
      base = poly_mulmod(base, base, mod, p);
      e >>= 1;
    }
    return r;
  };
  const auto primes = factorize(static_cast<std::int64_t>(order));
  auto is_primitive = [&](std::uint64_t x) {
    if (x == 0) return false;
    Poly g = digits_of(x, p, f);
    for (const auto& [l, unused] : primes) {
      Poly r = pow_poly(g, order / static_cast<std::uint64_t>(l));
      if (encode(r, p) == 1) return false;
    }
    return true;
  };

  Elem smallest = 0;
  for (std::uint64_t x = 1; x < q; ++x) {
    if (is_primitive(x)) {
      smallest = static_cast<Elem>(x);
      break;
    }
  }
  if (smallest == 0) throw std::logic_error("no primitive element found");
  Elem gen = smallest;
  if (choice == GeneratorChoice::kLargest) {
    for (std::uint64_t x = q - 1; x >= 1; --x) {
      if (is_primitive(x)) {
        gen = static_cast<Elem>(x);
        break;
      }
    }
  }
  impl->gen = gen;
  impl->anchor = smallest;

  impl->exp.assign(2 * order, 0);
  impl->log.assign(q, kNoLog);
  Poly g = digits_of(gen, p, f);
  Poly cur(f, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    Elem x = static_cast<Elem>(encode(cur, p));
    if (impl->log[x] != kNoLog) throw std::logic_error("generator is not primitive");
    impl->exp[k] = x;
    impl->exp[k + order] = x;
    impl->log[x] = static_cast<std::uint32_t>(k);
    cur = poly_mulmod(cur, g, mod, p);
  }
  impl->anchor_log_inv = inverse_mod(impl->log[smallest], order);

  // The trace is F_p-linear: tabulate it on the power basis, then extend.
  std::vector<int> basis_trace(f, 0);
  for (int i = 0; i < f; ++i) {
    Poly xi(f, 0);
    xi[i] = 1;
    Elem e = static_cast<Elem>(encode(xi, p));
    Elem acc = 0;
    Elem conj = e;
    for (int j = 0; j < f; ++j) {
      acc = impl->add(acc, conj);
      // conj <- conj^p
      Elem c = conj;
      Elem pw = 1;
      for (int k = 0; k < p; ++k) pw = impl->mul(pw, c);
      conj = pw;
    }
    if (acc >= static_cast<Elem>(p)) throw std::logic_error("trace left the prime field");
    basis_trace[i] = static_cast<int>(acc);
  }
  impl->trace.assign(q, 0);
  for (std::uint64_t x = 0; x < q; ++x) {
    std::uint64_t t = 0;
    std::uint64_t y = x;
    for (int i = 0; i < f; ++i) {
      t += (y % p) * static_cast<std::uint64_t>(basis_trace[i]);
      y /= p;
    }
    impl->trace[x] = static_cast<int>(t % p);
  }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_tuple(p, f, choice), std::move(impl));
  return FqField(it->second);
}

int FqField::p() const { return impl_->p; }
int FqField::f() const { return impl_->f; }
std::uint32_t FqField::q() const { return impl_->q; }
std::span<const int> FqField::modulus() const { return impl_->modulus; }
GeneratorChoice FqField::generator_choice() const { return impl_->choice; }
Elem FqField::generator() const { return impl_->gen; }
Elem FqField::anchor() const { return impl_->anchor; }

Elem FqField::from_int(std::int64_t c) const {
  std::int64_t r = c % impl_->p;
  return static_cast<Elem>(r < 0 ? r + impl_->p : r);
}

std::vector<int> FqField::digits(Elem x) const {
  if (x >= impl_->q) throw std::invalid_argument("element out of range");
  return digits_of(x, impl_->p, impl_->f);
}

Elem FqField::from_digits(std::span<const int> d) const {
  if (static_cast<int>(d.size()) > impl_->f) throw std::invalid_argument("too many digits");
  Poly v(d.begin(), d.end());
  for (int& c : v) {
    c %= impl_->p;
    if (c < 0) c += impl_->p;
  }
  return static_cast<Elem>(encode(v, impl_->p));
}

Elem FqField::add(Elem a, Elem b) const { return impl_->add(a, b); }
Elem FqField::neg(Elem a) const { return impl_->neg(a); }
Elem FqField::mul(Elem a, Elem b) const { return impl_->mul(a, b); }

Elem FqField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::uint32_t l = impl_->log[a];
  return impl_->exp[l == 0 ? 0 : impl_->q - 1 - l];
}

Elem FqField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = impl_->q - 1;
  return impl_->exp[(impl_->log[a] * (e % order)) % order];
}

std::uint32_t FqField::log(Elem x) const {
  if (x == 0 || x >= impl_->q) throw std::invalid_argument("discrete log of zero");
  return impl_->log[x];
}

Elem FqField::exp(std::uint64_t k) const { return impl_->exp[k % (impl_->q - 1)]; }

std::uint32_t FqField::anchored_log(Elem x) const {
  const std::uint64_t order = impl_->q - 1;
  return static_cast<std::uint32_t>((log(x) * impl_->anchor_log_inv) % order);
}

std::uint32_t FqField::mu_index(Elem x, std::uint32_t n) const {
  if (n == 0 || (impl_->q - 1) % n != 0) {
    throw std::invalid_argument(std::to_string(n) + " does not divide q - 1");
  }
  return anchored_log(x) % n;
}

int FqField::trace(Elem x) const { return impl_->trace.at(x); }

std::vector<Elem> FqField::embedding_into(const FqField& ext) const {
  if (ext.p() != p() || ext.f() % f() != 0) {
    throw std::invalid_argument("target is not an extension of this field");
  }
  const Poly& mod = impl_->modulus;
  Elem root = 0;
  if (f() > 1) {
    bool found = false;
    for (Elem y = 0; y < ext.q() && !found; ++y) {
      Elem v = 0;
      for (std::size_t i = mod.size(); i-- > 0;) {
        v = ext.add(ext.mul(v, y), ext.from_int(mod[i]));
      }
      if (v == 0) {
        root = y;
        found = true;
      }
    }
    if (!found) throw std::logic_error("modulus has no root in the extension");
  }
  std::vector<Elem> table(q());
  for (Elem x = 0; x < q(); ++x) {
    Poly d = digits(x);
    Elem v = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      v = ext.add(ext.mul(v, root), ext.from_int(d[i]));
    }
    table[x] = v;
  }
  return table;
}

MulChar::MulChar(FqField field, int order, std::int64_t exponent)
    : field_(std::move(field)), n_(order), e_(0) {
  if (order < 1 || (field_.q() - 1) % static_cast<std::uint32_t>(order) != 0) {
    throw std::invalid_argument("character order " + std::to_string(order) +
                                " does not divide q - 1 = " + std::to_string(field_.q() - 1));
  }
  std::int64_t r = exponent % order;
  e_ = static_cast<int>(r < 0 ? r + order : r);
}

MulChar MulChar::reduced() const {
  int g = std::gcd(n_, e_);
  return MulChar(field_, n_ / g, e_ / g);
}

MulChar MulChar::at_level(int N) const {
  if (N < 1 || N % n_ != 0) {
    throw std::invalid_argument("level " + std::to_string(N) + " is not a multiple of " +
                                std::to_string(n_));
  }
  return MulChar(field_, N, static_cast<std::int64_t>(e_) * (N / n_));
}

int MulChar::exponent_at(Elem x) const {
  if (x == 0) throw std::invalid_argument("multiplicative character evaluated at 0");
  std::uint64_t k = field_.mu_index(x, static_cast<std::uint32_t>(n_));
  return static_cast<int>((k * static_cast<std::uint64_t>(e_)) % static_cast<std::uint64_t>(n_));
}

MulChar operator*(const MulChar& a, const MulChar& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("characters over different fields");
  int L = static_cast<int>(lcm64(a.n_, b.n_));
  return MulChar(a.field_, L,
                 static_cast<std::int64_t>(a.e_) * (L / a.n_) +
                     static_cast<std::int64_t>(b.e_) * (L / b.n_));
}

bool operator==(const MulChar& a, const MulChar& b) {
  if (!(a.field_ == b.field_)) return false;
  MulChar ra = a.reduced();
  MulChar rb = b.reduced();
  return ra.n_ == rb.n_ && ra.e_ == rb.e_;
}

CycInt char_eval(const MulChar& chi, Elem x) {
  return CycInt::root_of_unity(chi.order(), chi.exponent_at(x));
}

int add_char_exponent(const FqField& field, Elem x, Elem c) {
  if (c == 0) throw std::invalid_argument("additive character twist must be nonzero");
  return field.trace(field.mul(c, x));
}

CycInt add_char_eval(const FqField& field, Elem x, Elem c) {
  return CycInt::root_of_unity(field.p(), add_char_exponent(field, x, c));
}

}  // namespace tameconv
