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

#include "tameconv/convolve.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "tameconv/charsums.hpp"

namespace tameconv {
namespace {

void require_level(const FqField& field, int n) {
  if (n < 1 || (field.q() - 1) % static_cast<std::uint32_t>(n) != 0) {
    throw std::invalid_argument("level " + std::to_string(n) + " does not divide q - 1 = " +
                                std::to_string(field.q() - 1));
  }
}

// (n, e) -> (n / g, e / g), g = gcd(n, e mod n).
std::pair<int, int> reduce_char(int n, int e) {
  e = ((e % n) + n) % n;
  int g = std::gcd(n, e);
  return {n / g, e / g};
}

}  // namespace

Convolver::Convolver(FqField field) : field_(std::move(field)) {}

CycScalar Convolver::twist(int n1, int e1, int n2, int e2) {
  auto [m1, f1] = reduce_char(n1, e1);
  auto [m2, f2] = reduce_char(n2, e2);
  if (f1 == 0 || f2 == 0) return CycScalar::one();
  // J is symmetric in its arguments.
  auto key = std::make_tuple(m1, f1, m2, f2);
  if (std::make_pair(m2, f2) < std::make_pair(m1, f1)) key = std::make_tuple(m2, f2, m1, f1);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  JacobiKey jk = JacobiKey::make(MulChar(field_, std::get<0>(key), std::get<1>(key)),
                                 MulChar(field_, std::get<2>(key), std::get<3>(key)));
  CycScalar tw = frobenius_twist(jk).minimized();
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(key, tw);
  return tw;
}

TameRep Convolver::arithmetic(const TameRep& a, const TameRep& b) {
  require_level(field_, a.level());
  require_level(field_, b.level());
  const int r = static_cast<int>(lcm64(a.level(), b.level()));
  const int a1 = r / a.level(), a2 = r / b.level();
  std::vector<Component> out;
  out.reserve(a.components().size() * b.components().size());
  for (const Component& x : a.components()) {
    for (const Component& y : b.components()) {
      CycScalar tw = twist(a.level(), x.exponent, b.level(), y.exponent);
      int e = static_cast<int>((static_cast<std::int64_t>(a1) * x.exponent +
                                static_cast<std::int64_t>(a2) * y.exponent) % r);
      out.push_back(Component{e, x.alpha * y.alpha * tw, x.mult * y.mult});
    }
  }
  return TameRep(r, std::move(out));
}

ConvolutionTable universal_table(const FqField& field, int n1, int n2) {
  require_level(field, n1);
  require_level(field, n2);
  Convolver conv(field);
  const int r = static_cast<int>(lcm64(n1, n2));
  ConvolutionTable t{field, n1, n2, r, r / n1, r / n2, {}};
  t.entries.reserve(static_cast<std::size_t>(n1) * n2);
  for (int e1 = 0; e1 < n1; ++e1) {
    for (int e2 = 0; e2 < n2; ++e2) {
      t.entries.push_back(TableEntry{e1, e2, (t.a1 * e1 + t.a2 * e2) % r, conv.twist(n1, e1, n2, e2)});
    }
  }
  return t;
}

TameRep convolve_arithmetic(const FqField& field, const TameRep& a, const TameRep& b) {
  Convolver conv(field);
  return conv.arithmetic(a, b);
}

TameRep convolve_geometric(const TameRep& a, const TameRep& b) {
  return erase_scalars(tensor(a, b));
}

std::map<RootOfUnity, std::int64_t> ts_monodromy(const TameRep& a, const TameRep& b) {
  return monodromy_eigenvalues(convolve_geometric(a, b));
}

TameRep picard_lefschetz_demo(Convolver& conv, int rcount) {
  if (conv.field().p() == 2) {
    throw std::invalid_argument("the quadratic character needs odd characteristic");
  }
  if (rcount < 1) throw std::invalid_argument("fold count must be at least 1");
  const TameRep line(2, {Component{1, CycScalar::one(), 1}});
  TameRep acc = line;
  for (int i = 1; i < rcount; ++i) acc = conv.arithmetic(acc, line);
  return acc;
}

TameRep picard_lefschetz_demo(const FqField& field, int rcount) {
  Convolver conv(field);
  return picard_lefschetz_demo(conv, rcount);
}

}  // namespace tameconv
