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

// Enumeration kernels over F_q. Every kernel reduces a character sum to an
// exponent histogram: entry k counts the terms equal to zeta_L^k.
//
// serial:: is the reference; parallel:: splits the element range across OpenMP
// threads and merges per-thread histograms. Integer sums make the merge order
// irrelevant, so both produce identical output.

#pragma once

#include <cstdint>
#include <vector>

#include "tameconv/finite_field.hpp"

namespace tameconv::kernels {

using Histogram = std::vector<std::int64_t>;

namespace serial {

/// Terms chi1^{-1}(t) chi2^{-1}(1 - t), t != 0, 1, at level L (n1 | L, n2 | L).
Histogram jacobi_histogram(const FqField& k, int n1, int e1, int n2, int e2, int L);
/// Terms chi(x) psi(c x), x != 0, at level L (n | L, p | L).
Histogram gauss_histogram(const FqField& k, int n, int e, Elem c, int L);
/// Terms chi1(u) chi2(t - u), u != 0, t, at level L.
Histogram inner_sum_histogram(const FqField& k, int n1, int e1, int n2, int e2, Elem t, int L);
/// fiber[u] = #{y != 0 : y^n = u}.
std::vector<std::int64_t> power_fiber(const FqField& k, int n);
/// #{(y1, y2) : y1^n1 + y2^n2 = t, y1 y2 != 0}.
std::int64_t count_points(const FqField& k, int n1, int n2, Elem t);
/// counts[k1 * n2 + k2] = #{u : u, t - u != 0, u ~ k1 in mu_n1, t - u ~ k2 in
/// mu_n2}. Every inner sum S(chi1, chi2; t) is a contraction of this table.
std::vector<std::int64_t> index_pair_counts(const FqField& k, int n1, int n2, Elem t);

}  // namespace serial

namespace parallel {

Histogram jacobi_histogram(const FqField& k, int n1, int e1, int n2, int e2, int L);
Histogram gauss_histogram(const FqField& k, int n, int e, Elem c, int L);
Histogram inner_sum_histogram(const FqField& k, int n1, int e1, int n2, int e2, Elem t, int L);
std::vector<std::int64_t> power_fiber(const FqField& k, int n);
std::int64_t count_points(const FqField& k, int n1, int n2, Elem t);
std::vector<std::int64_t> index_pair_counts(const FqField& k, int n1, int n2, Elem t);

}  // namespace parallel

}  // namespace tameconv::kernels
