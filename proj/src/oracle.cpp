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

#include "tameconv/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "tameconv/charsums.hpp"
#include "tameconv/kernels.hpp"

namespace tameconv {

void validate(const CurveSpec& spec) {
  if (spec.t == 0 || spec.t >= spec.base.q()) {
    throw std::invalid_argument("t must be a nonzero element of the base field");
  }
  if (spec.n1 < 1 || spec.n2 < 1) throw std::invalid_argument("exponents must be positive");
  if (spec.n1 % spec.base.p() == 0 || spec.n2 % spec.base.p() == 0) {
    throw std::invalid_argument("exponents must be prime to the characteristic");
  }
  if (spec.m < 1) throw std::invalid_argument("extension degree must be at least 1");
}

FqField extension_field(const CurveSpec& spec) {
  validate(spec);
  return FqField::create(spec.base.p(), spec.base.f() * spec.m, spec.base.generator_choice());
}

Elem embedded_t(const CurveSpec& spec, const FqField& ext) {
  if (spec.m == 1) return spec.t;
  return spec.base.embedding_into(ext)[spec.t];
}

std::int64_t count_points(const CurveSpec& spec) {
  FqField ext = extension_field(spec);
  return kernels::serial::count_points(ext, spec.n1, spec.n2, embedded_t(spec, ext));
}

std::pair<int, int> effective_orders(const CurveSpec& spec) {
  validate(spec);
  std::uint64_t qm = 1;
  for (int i = 0; i < spec.m; ++i) qm *= spec.base.q();
  return {static_cast<int>(std::gcd<std::uint64_t>(spec.n1, qm - 1)),
          static_cast<int>(std::gcd<std::uint64_t>(spec.n2, qm - 1))};
}

CycInt character_expansion(const CurveSpec& spec, std::vector<InnerSum>* terms) {
  if (effective_orders(spec) != std::make_pair(spec.n1, spec.n2)) {
    throw std::invalid_argument("n1 and n2 must divide q^m - 1 for the character expansion");
  }
  PointOracle oracle(spec.base, spec.n1, spec.n2, spec.m);
  PointCountCheck check = oracle.verify(spec.t);
  if (terms) *terms = std::move(check.terms);
  return check.expansion;
}

PointCountCheck verify_point_count(const CurveSpec& spec) {
  PointOracle oracle(spec.base, spec.n1, spec.n2, spec.m);
  return oracle.verify(spec.t);
}

PointOracle::PointOracle(FqField base, int n1, int n2, int m)
    : spec_{base, n1, n2, 1, m},
      ext_(extension_field(spec_)) {
  std::tie(d1_, d2_) = effective_orders(spec_);
  r_ = static_cast<int>(lcm64(d1_, d2_));
  embed_ = m == 1 ? std::vector<Elem>() : spec_.base.embedding_into(ext_);
  jacobi_.reserve(static_cast<std::size_t>(d1_) * d2_);
  for (int e1 = 0; e1 < d1_; ++e1) {
    for (int e2 = 0; e2 < d2_; ++e2) {
      MulChar c1(ext_, d1_, e1), c2(ext_, d2_, e2);
      jacobi_.push_back(jacobi_sum(JacobiKey::make(c1.inverse(), c2.inverse())));
    }
  }
}

std::int64_t PointOracle::count(Elem t) const {
  CurveSpec s = spec_;
  s.t = t;
  validate(s);
  return kernels::serial::count_points(ext_, s.n1, s.n2, embed_.empty() ? t : embed_[t]);
}

PointCountCheck PointOracle::verify(Elem t) const {
  const int n1 = d1_, n2 = d2_;
  PointCountCheck out;
  out.count = count(t);
  const Elem te = embed_.empty() ? t : embed_[t];
  auto pairs = kernels::serial::index_pair_counts(ext_, n1, n2, te);
  const int a1 = r_ / n1, a2 = r_ / n2;
  RootSum total(r_);
  bool holds = true;
  for (int e1 = 0; e1 < n1; ++e1) {
    for (int e2 = 0; e2 < n2; ++e2) {
      RootSum s(r_);
      for (int k1 = 0; k1 < n1; ++k1) {
        for (int k2 = 0; k2 < n2; ++k2) {
          std::int64_t c = pairs[k1 * n2 + k2];
          if (c == 0) continue;
          std::int64_t k = static_cast<std::int64_t>(a1) * (e1 * k1 % n1) +
                           static_cast<std::int64_t>(a2) * (e2 * k2 % n2);
          s.add(k, c);
          total.add(k, c);
        }
      }
      CycInt value = s.to_cycint();
      MulChar c1(ext_, n1, e1), c2(ext_, n2, e2);
      CycInt predicted = -(char_eval(c1 * c2, te) * jacobi_[e1 * n2 + e2]);
      bool bridge = value == predicted;
      holds = holds && bridge;
      out.terms.push_back(InnerSum{e1, e2, std::move(value), bridge});
    }
  }
  out.expansion = total.to_cycint();
  out.holds = holds && out.expansion == CycInt::from_integer(out.count);
  return out;
}

}  // namespace tameconv
