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

#include "tameconv/tamerep.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "tameconv/json_io.hpp"

namespace tameconv {

TameRep::TameRep(int level, std::vector<Component> components) : level_(level) {
  if (level < 1) throw std::invalid_argument("representation level must be positive");
  struct Keyed {
    int e;
    std::string key;
    Component c;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(components.size());
  for (Component& c : components) {
    if (c.mult < 1) throw std::invalid_argument("component multiplicity must be positive");
    if (c.alpha.is_zero()) throw std::invalid_argument("Frobenius scalar must be nonzero");
    c.exponent = static_cast<int>(((c.exponent % level) + level) % level);
    c.alpha = c.alpha.minimized();
    std::string key = canonical_string(c.alpha);
    keyed.push_back({c.exponent, std::move(key), std::move(c)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.e, a.key) < std::tie(b.e, b.key);
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].e == keyed[i - 1].e && keyed[i].key == keyed[i - 1].key) {
      comps_.back().mult += keyed[i].c.mult;
    } else {
      comps_.push_back(std::move(keyed[i].c));
    }
  }
}

TameRep TameRep::unit() { return TameRep(1, {Component{0, CycScalar::one(), 1}}); }

std::int64_t TameRep::rank() const {
  std::int64_t r = 0;
  for (const Component& c : comps_) r += c.mult;
  return r;
}

bool operator==(const TameRep& a, const TameRep& b) {
  if (a.level_ != b.level_ || a.comps_.size() != b.comps_.size()) return false;
  for (std::size_t i = 0; i < a.comps_.size(); ++i) {
    const Component& x = a.comps_[i];
    const Component& y = b.comps_[i];
    if (x.exponent != y.exponent || x.mult != y.mult || !(x.alpha == y.alpha)) return false;
  }
  return true;
}

TameRep raise_level(const TameRep& rep, int N) {
  if (N < 1 || N % rep.level() != 0) {
    throw std::invalid_argument("level " + std::to_string(N) + " is not a multiple of " +
                                std::to_string(rep.level()));
  }
  const int s = N / rep.level();
  std::vector<Component> out = rep.components();
  for (Component& c : out) c.exponent *= s;
  return TameRep(N, std::move(out));
}

TameRep tensor(const TameRep& a, const TameRep& b) {
  const int L = static_cast<int>(lcm64(a.level(), b.level()));
  const std::int64_t sa = L / a.level(), sb = L / b.level();
  std::vector<Component> out;
  out.reserve(a.components().size() * b.components().size());
  for (const Component& x : a.components()) {
    for (const Component& y : b.components()) {
      int e = static_cast<int>((x.exponent * sa + y.exponent * sb) % L);
      out.push_back(Component{e, x.alpha * y.alpha, x.mult * y.mult});
    }
  }
  return TameRep(L, std::move(out));
}

TameRep erase_scalars(const TameRep& rep) {
  std::vector<Component> out = rep.components();
  for (Component& c : out) c.alpha = CycScalar::one();
  return TameRep(rep.level(), std::move(out));
}

RootOfUnity RootOfUnity::reduced(int n, std::int64_t e) {
  std::int64_t r = ((e % n) + n) % n;
  int g = std::gcd(n, static_cast<int>(r));
  return RootOfUnity{n / g, static_cast<int>(r) / g};
}

std::map<RootOfUnity, std::int64_t> monodromy_eigenvalues(const TameRep& rep) {
  std::map<RootOfUnity, std::int64_t> out;
  for (const Component& c : rep.components()) {
    out[RootOfUnity::reduced(rep.level(), c.exponent)] += c.mult;
  }
  return out;
}

CycScalar frobenius_trace(const TameRep& rep) {
  CycScalar acc(CycInt::zero(1));
  for (const Component& c : rep.components()) {
    acc = acc + c.alpha * CycScalar(CycInt::from_integer(c.mult));
  }
  return acc.minimized();
}

}  // namespace tameconv
