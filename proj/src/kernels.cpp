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

#include "tameconv/kernels.hpp"

#include <stdexcept>
#include <string>

namespace tameconv::kernels {
namespace {

void require_level(int L, int n, const char* what) {
  if (L < 1 || n < 1 || L % n != 0) {
    throw std::invalid_argument(std::string(what) + ": level " + std::to_string(L) +
                                " is not a multiple of " + std::to_string(n));
  }
}

// Exponent of chi(x) at level L for the character (n, e).
inline std::int64_t char_term(const FqField& k, Elem x, int n, int e, int L) {
  std::int64_t idx = k.mu_index(x, static_cast<std::uint32_t>(n));
  return (idx * e % n) * (L / n);
}

inline int wrap(std::int64_t v, int L) {
  v %= L;
  return static_cast<int>(v < 0 ? v + L : v);
}

// A term function maps an element index to an exponent in [0, L), or -1 to
// skip the element.
template <class Term>
Histogram serial_hist(Elem lo, Elem hi, int L, Term term) {
  Histogram h(L, 0);
  for (Elem x = lo; x < hi; ++x) {
    int k = term(x);
    if (k >= 0) ++h[k];
  }
  return h;
}

template <class Term>
Histogram parallel_hist(Elem lo, Elem hi, int L, Term term) {
  Histogram total(L, 0);
  const std::int64_t b = lo, e = hi;
#pragma omp parallel
  {
    Histogram local(L, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t x = b; x < e; ++x) {
      int k = term(static_cast<Elem>(x));
      if (k >= 0) ++local[k];
    }
#pragma omp critical
    for (int i = 0; i < L; ++i) total[i] += local[i];
  }
  return total;
}

auto jacobi_term(const FqField& k, int n1, int e1, int n2, int e2, int L) {
  require_level(L, n1, "jacobi_histogram");
  require_level(L, n2, "jacobi_histogram");
  return [&k, n1, e1, n2, e2, L](Elem t) {
    Elem u = k.sub(1, t);
    return wrap(-(char_term(k, t, n1, e1, L) + char_term(k, u, n2, e2, L)), L);
  };
}

auto gauss_term(const FqField& k, int n, int e, Elem c, int L) {
  require_level(L, n, "gauss_histogram");
  require_level(L, k.p(), "gauss_histogram");
  if (c == 0) throw std::invalid_argument("gauss_histogram: twist must be nonzero");
  return [&k, n, e, c, L](Elem x) {
    std::int64_t a = add_char_exponent(k, x, c) * static_cast<std::int64_t>(L / k.p());
    return wrap(char_term(k, x, n, e, L) + a, L);
  };
}

auto inner_term(const FqField& k, int n1, int e1, int n2, int e2, Elem t, int L) {
  require_level(L, n1, "inner_sum_histogram");
  require_level(L, n2, "inner_sum_histogram");
  return [&k, n1, e1, n2, e2, t, L](Elem u) {
    Elem v = k.sub(t, u);
    if (v == 0) return -1;
    return wrap(char_term(k, u, n1, e1, L) + char_term(k, v, n2, e2, L), L);
  };
}

auto pair_term(const FqField& k, int n1, int n2, Elem t) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("index_pair_counts: orders must be positive");
  return [&k, n1, n2, t](Elem u) {
    Elem v = k.sub(t, u);
    if (v == 0) return -1;
    return static_cast<int>(k.mu_index(u, n1) * n2 + k.mu_index(v, n2));
  };
}

}  // namespace

namespace serial {

Histogram jacobi_histogram(const FqField& k, int n1, int e1, int n2, int e2, int L) {
  return serial_hist(2, k.q(), L, jacobi_term(k, n1, e1, n2, e2, L));
}

Histogram gauss_histogram(const FqField& k, int n, int e, Elem c, int L) {
  return serial_hist(1, k.q(), L, gauss_term(k, n, e, c, L));
}

Histogram inner_sum_histogram(const FqField& k, int n1, int e1, int n2, int e2, Elem t, int L) {
  return serial_hist(1, k.q(), L, inner_term(k, n1, e1, n2, e2, t, L));
}

std::vector<std::int64_t> power_fiber(const FqField& k, int n) {
  if (n < 1) throw std::invalid_argument("power_fiber: exponent must be positive");
  std::vector<std::int64_t> fiber(k.q(), 0);
  for (Elem y = 1; y < k.q(); ++y) ++fiber[k.pow(y, n)];
  return fiber;
}

std::int64_t count_points(const FqField& k, int n1, int n2, Elem t) {
  auto fiber = power_fiber(k, n2);
  std::int64_t total = 0;
  for (Elem y = 1; y < k.q(); ++y) total += fiber[k.sub(t, k.pow(y, n1))];
  return total;
}

std::vector<std::int64_t> index_pair_counts(const FqField& k, int n1, int n2, Elem t) {
  return serial_hist(1, k.q(), n1 * n2, pair_term(k, n1, n2, t));
}

}  // namespace serial

namespace parallel {

Histogram jacobi_histogram(const FqField& k, int n1, int e1, int n2, int e2, int L) {
  return parallel_hist(2, k.q(), L, jacobi_term(k, n1, e1, n2, e2, L));
}

Histogram gauss_histogram(const FqField& k, int n, int e, Elem c, int L) {
  return parallel_hist(1, k.q(), L, gauss_term(k, n, e, c, L));
}

Histogram inner_sum_histogram(const FqField& k, int n1, int e1, int n2, int e2, Elem t, int L) {
  return parallel_hist(1, k.q(), L, inner_term(k, n1, e1, n2, e2, t, L));
}

std::vector<std::int64_t> power_fiber(const FqField& k, int n) {
  if (n < 1) throw std::invalid_argument("power_fiber: exponent must be positive");
  const std::int64_t q = k.q();
  std::vector<std::int64_t> fiber(q, 0);
#pragma omp parallel
  {
    std::vector<std::int64_t> local(q, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t y = 1; y < q; ++y) ++local[k.pow(static_cast<Elem>(y), n)];
#pragma omp critical
    for (std::int64_t i = 0; i < q; ++i) fiber[i] += local[i];
  }
  return fiber;
}

std::int64_t count_points(const FqField& k, int n1, int n2, Elem t) {
  auto fiber = power_fiber(k, n2);
  const std::int64_t q = k.q();
  std::int64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (std::int64_t y = 1; y < q; ++y) {
    total += fiber[k.sub(t, k.pow(static_cast<Elem>(y), n1))];
  }
  return total;
}

std::vector<std::int64_t> index_pair_counts(const FqField& k, int n1, int n2, Elem t) {
  return parallel_hist(1, k.q(), n1 * n2, pair_term(k, n1, n2, t));
}

}  // namespace parallel

}  // namespace tameconv::kernels
