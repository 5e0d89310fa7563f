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

#include "tameconv/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tameconv {

std::int64_t euler_phi(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("euler_phi: argument must be positive");
  std::int64_t r = m;
  for (auto [p, e] : factorize(m)) r = r / p * (p - 1);
  return r;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t m) {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    lo.push_back(d);
    if (d != m / d) hi.push_back(m / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

struct CycloInfo {
  int m;
  int phi;
  std::vector<std::int64_t> poly;                     // ascending, monic
  std::vector<std::pair<int, std::int64_t>> tail;     // nonzero terms below x^phi
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  }
  return r;
}

// Exact quotient of a by the monic polynomial b.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> a,
                                       const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const std::int64_t c = a[k];
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      if (b[j] != 0) a[k - db + j] -= checked_mul(c, b[j]);
    }
  }
  return q;
}

std::vector<std::int64_t> substitute_power(const std::vector<std::int64_t>& f,
                                           std::int64_t e) {
  std::vector<std::int64_t> g((f.size() - 1) * e + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) g[i * e] = f[i];
  return g;
}

std::vector<std::int64_t> compute_cyclotomic(int m) {
  if (m == 1) return {-1, 1};
  // Phi_p, then Phi_{sp}(x) = Phi_s(x^p) / Phi_s(x) over the radical, smallest
  // primes first so the divisors stay short.
  auto fac = factorize(m);
  std::int64_t rad = 1;
  std::vector<std::int64_t> f;
  for (auto [p, e] : fac) {
    if (f.empty()) {
      f.assign(p, 1);
    } else {
      f = divide_monic(substitute_power(f, p), f);
    }
    rad *= p;
  }
  return substitute_power(f, m / rad);
}

const CycloInfo& cyclo_info(int m) {
  if (m < 1) throw std::invalid_argument("conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const CycloInfo>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto info = std::make_unique<CycloInfo>();
  info->m = m;
  info->poly = compute_cyclotomic(m);
  info->phi = static_cast<int>(info->poly.size()) - 1;
  for (int j = 0; j < info->phi; ++j) {
    if (info->poly[j] != 0) info->tail.emplace_back(j, info->poly[j]);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(m, std::move(info));
  return *it->second;
}

bool all_small(const std::vector<Integer>& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_small(); });
}

// Reduces a (any length) modulo Phi_m in machine words. Returns false on
// overflow, leaving a unspecified.
bool reduce_small(std::vector<std::int64_t>& a, const CycloInfo& info) {
  const int phi = info.phi;
  for (std::size_t k = a.size(); k-- > static_cast<std::size_t>(phi);) {
    const std::int64_t c = a[k];
    if (c == 0) continue;
    a[k] = 0;
    for (auto [j, f] : info.tail) {
      std::int64_t prod;
      std::int64_t& dst = a[k - phi + j];
      if (__builtin_mul_overflow(c, f, &prod) || __builtin_sub_overflow(dst, prod, &dst)) {
        return false;
      }
    }
  }
  a.resize(phi);
  return true;
}

void reduce_big(std::vector<Integer>& a, const CycloInfo& info) {
  const int phi = info.phi;
  for (std::size_t k = a.size(); k-- > static_cast<std::size_t>(phi);) {
    if (a[k].is_zero()) continue;
    const Integer c = -a[k];
    a[k] = 0;
    for (auto [j, f] : info.tail) a[k - phi + j].add_mul(c, Integer(f));
  }
  a.resize(phi);
}

std::vector<Integer> reduce(std::vector<Integer> a, const CycloInfo& info) {
  if (a.size() < static_cast<std::size_t>(info.phi)) a.resize(info.phi);
  if (all_small(a)) {
    std::vector<std::int64_t> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i].small();
    if (reduce_small(s, info)) return {s.begin(), s.end()};
  }
  reduce_big(a, info);
  return a;
}

std::int64_t mod_nonneg(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::span<const std::int64_t> cyclotomic_polynomial(int m) {
  return cyclo_info(m).poly;
}

// ---------------------------------------------------------------------------
// CycInt

CycInt::CycInt() : m_(1), c_(1) {}

CycInt CycInt::zero(int m) { return CycInt(m, std::vector<Integer>(cyclo_info(m).phi)); }

CycInt CycInt::from_integer(const Integer& c, int m) {
  CycInt r = zero(m);
  r.c_[0] = c;
  return r;
}

CycInt CycInt::root_of_unity(int m, std::int64_t k) {
  std::vector<Integer> counts(m);
  counts[mod_nonneg(k, m)] = 1;
  return from_exponent_counts(m, std::move(counts));
}

CycInt CycInt::from_coeffs(int m, std::vector<Integer> coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(cyclo_info(m).phi)) {
    throw std::invalid_argument("coefficient vector length must equal phi(m)");
  }
  return CycInt(m, std::move(coeffs));
}

CycInt CycInt::from_exponent_counts(int m, std::span<const std::int64_t> counts) {
  if (counts.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("exponent counts must have length m");
  }
  const CycloInfo& info = cyclo_info(m);
  std::vector<std::int64_t> s(counts.begin(), counts.end());
  if (reduce_small(s, info)) return CycInt(m, {s.begin(), s.end()});
  return CycInt(m, reduce({counts.begin(), counts.end()}, info));
}

CycInt CycInt::from_exponent_counts(int m, std::vector<Integer> counts) {
  if (counts.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("exponent counts must have length m");
  }
  return CycInt(m, reduce(std::move(counts), cyclo_info(m)));
}

bool CycInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x.is_zero(); });
}

std::optional<Integer> CycInt::as_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return std::nullopt;
  }
  return c_[0];
}

Integer CycInt::content() const {
  Integer g = 0;
  for (const auto& x : c_) {
    if (!x.is_zero()) g = gcd(g, x);
    if (g.is_one()) break;
  }
  return g;
}

CycInt CycInt::embed(int M) const {
  if (M < 1 || M % m_ != 0) {
    throw std::invalid_argument("embed: target conductor must be a multiple of " +
                                std::to_string(m_));
  }
  if (M == m_) return *this;
  const std::int64_t step = M / m_;
  std::vector<Integer> counts(M);
  for (std::size_t i = 0; i < c_.size(); ++i) counts[i * step] = c_[i];
  return from_exponent_counts(M, std::move(counts));
}

std::optional<CycInt> CycInt::project(int d) const {
  if (d < 1 || m_ % d != 0) {
    throw std::invalid_argument("project: target conductor must divide " + std::to_string(m_));
  }
  CycInt cur = *this;
  for (auto [p64, e] : factorize(m_ / d)) {
    const int p = static_cast<int>(p64);
    for (int step = 0; step < e; ++step) {
      const int m = cur.m_;
      const int sub = m / p;
      if (sub % p == 0) {
        // Phi_m(x) = Phi_sub(x^p): the subring is spanned by the powers x^{ip}.
        std::vector<Integer> out(cyclo_info(sub).phi);
        for (std::size_t k = 0; k < cur.c_.size(); ++k) {
          if (k % p == 0) {
            out[k / p] = cur.c_[k];
          } else if (!cur.c_[k].is_zero()) {
            return std::nullopt;
          }
        }
        cur = CycInt(sub, std::move(out));
      } else {
        // Z[zeta_m] = Z[zeta_sub] (x) Z[zeta_p] with zeta_m = zeta_sub^a zeta_p^b.
        const std::int64_t a = [&] {
          for (std::int64_t t = 1; t <= sub; ++t) {
            if ((t * p) % sub == 1 % sub) return t;
          }
          return std::int64_t{1};
        }();
        const std::int64_t b = [&] {
          for (std::int64_t t = 1; t <= p; ++t) {
            if ((t * sub) % p == 1) return t;
          }
          return std::int64_t{1};
        }();
        std::vector<std::vector<Integer>> layers(p, std::vector<Integer>(sub));
        for (std::size_t k = 0; k < cur.c_.size(); ++k) {
          if (cur.c_[k].is_zero()) continue;
          const std::int64_t kk = static_cast<std::int64_t>(k);
          layers[(b * kk) % p][(a * kk) % sub] += cur.c_[k];
        }
        for (int s = 0; s < sub; ++s) {
          const Integer top = layers[p - 1][s];
          if (top.is_zero()) continue;
          for (int j = 0; j < p - 1; ++j) layers[j][s] -= top;
        }
        for (int j = 1; j < p - 1; ++j) {
          if (!from_exponent_counts(sub, std::move(layers[j])).is_zero()) return std::nullopt;
        }
        cur = from_exponent_counts(sub, std::move(layers[0]));
      }
    }
  }
  return cur;
}

CycInt CycInt::minimized() const {
  if (auto v = as_integer()) return from_integer(*v, 1);
  CycInt cur = *this;
  bool progress = true;
  while (progress && cur.m_ > 1) {
    progress = false;
    for (auto [p, e] : factorize(cur.m_)) {
      if (auto sub = cur.project(static_cast<int>(cur.m_ / p))) {
        cur = std::move(*sub);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

CycInt CycInt::galois(std::int64_t a) const {
  const std::int64_t am = mod_nonneg(a, m_);
  if (std::gcd(am, static_cast<std::int64_t>(m_)) != 1 && m_ != 1) {
    throw std::invalid_argument("galois: exponent must be a unit modulo the conductor");
  }
  if (am == 1 % m_) return *this;
  std::vector<Integer> counts(m_);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) counts[(am * static_cast<std::int64_t>(k)) % m_] += c_[k];
  }
  return from_exponent_counts(m_, std::move(counts));
}

CycInt CycInt::conj() const { return galois(m_ - 1); }

CycInt CycInt::abs_squared() const { return *this * conj(); }

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (o.m_ != m_) {
    const int M = static_cast<int>(lcm64(m_, o.m_));
    *this = embed(M);
    return *this += o.embed(M);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) { return *this += -o; }

CycInt& CycInt::operator*=(const Integer& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) { return *this = *this * o; }

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.m_ != b.m_) {
    const int M = static_cast<int>(lcm64(a.m_, b.m_));
    return a.embed(M) * b.embed(M);
  }
  const CycloInfo& info = cyclo_info(a.m_);
  const std::size_t n = a.c_.size();
  if (all_small(a.c_) && all_small(b.c_)) {
    std::vector<std::int64_t> prod(2 * n - 1, 0);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const std::int64_t x = a.c_[i].small();
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t t;
        if (__builtin_mul_overflow(x, b.c_[j].small(), &t) ||
            __builtin_add_overflow(prod[i + j], t, &prod[i + j])) {
          ok = false;
          break;
        }
      }
    }
    if (ok && reduce_small(prod, info)) return CycInt(a.m_, {prod.begin(), prod.end()});
  }
  std::vector<Integer> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j].add_mul(a.c_[i], b.c_[j]);
  }
  reduce_big(prod, info);
  return CycInt(a.m_, std::move(prod));
}

CycInt CycInt::divexact(const Integer& d) const {
  CycInt r = *this;
  for (auto& x : r.c_) x = x.divexact(d);
  return r;
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  const int M = static_cast<int>(lcm64(a.m_, b.m_));
  return a.embed(M).c_ == b.embed(M).c_;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c_[k];
    } else {
      if (!c_[k].is_one()) os << c_[k] << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  os << " [m=" << m_ << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// CycScalar

CycScalar::CycScalar(CycInt num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("CycScalar: zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const Integer g = gcd(num_.content(), den_);
  if (!g.is_one()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
}

CycScalar CycScalar::abs_squared() const {
  return CycScalar(num_.abs_squared(), den_ * den_);
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
  if (a.den_ == b.den_) return CycScalar(a.num_ + b.num_, a.den_);
  return CycScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  return CycScalar(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  // Both sides are normalized, so equal values have equal denominators.
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::string CycScalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/" + den_.to_string();
}

// ---------------------------------------------------------------------------
// RootSum

RootSum::RootSum(int m) : m_(m), c_(m) {
  if (m < 1) throw std::invalid_argument("RootSum: conductor must be positive");
}

void RootSum::add(std::int64_t k, const Integer& c) { c_[mod_nonneg(k, m_)] += c; }

void RootSum::add_product(const RootSum& a, const RootSum& b, const Integer& scale) {
  if (a.m_ != m_ || b.m_ != m_) throw std::invalid_argument("RootSum: conductor mismatch");
  std::vector<std::pair<int, Integer>> nb;
  for (int j = 0; j < m_; ++j) {
    if (!b.c_[j].is_zero()) nb.emplace_back(j, b.c_[j]);
  }
  for (int i = 0; i < m_; ++i) {
    if (a.c_[i].is_zero()) continue;
    const Integer s = a.c_[i] * scale;
    for (const auto& [j, v] : nb) {
      int k = i + j;
      if (k >= m_) k -= m_;
      c_[k].add_mul(s, v);
    }
  }
}

void RootSum::add_cycint(const CycInt& x, const Integer& scale) {
  if (m_ % x.conductor() != 0) {
    throw std::invalid_argument("RootSum: element conductor must divide accumulator conductor");
  }
  const std::int64_t step = m_ / x.conductor();
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    if (!x.coeffs()[k].is_zero()) c_[k * step].add_mul(x.coeffs()[k], scale);
  }
}

CycInt RootSum::to_cycint() const { return CycInt::from_exponent_counts(m_, c_); }

bool RootSum::vanishes() const {
  std::vector<Integer> c = c_;
  const std::int64_t m = m_;
  for (auto [p, e] : factorize(m)) {
    std::int64_t P = 1;
    for (int i = 0; i < e; ++i) P *= p;
    const std::int64_t rest = m / P;
    // CRT idempotent for the P-axis: 1 mod P, 0 mod m/P.
    std::int64_t idem = 0;
    for (std::int64_t t = 0; t < P; ++t) {
      if ((rest * t) % P == 1 % P) {
        idem = rest * t;
        break;
      }
    }
    const std::int64_t low = P / p;
    const std::int64_t top = (p - 1) * low;
    for (std::int64_t k = 0; k < m; ++k) {
      if (k % P < top || c[k].is_zero()) continue;
      const Integer v = c[k];
      c[k] = 0;
      for (std::int64_t t = 1; t < p; ++t) {
        c[mod_nonneg(k - (t * low % m) * idem, m)] -= v;
      }
    }
  }
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x.is_zero(); });
}

}  // namespace tameconv
