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

#include <gtest/gtest.h>

#include "tameconv/json_io.hpp"
#include "test_support.hpp"

namespace tameconv {
namespace {

CycScalar integer_scalar(std::int64_t v) { return CycScalar(CycInt::from_integer(v)); }

TameRep line(int n, int e, CycScalar alpha = CycScalar::one(), std::int64_t mult = 1) {
  return TameRep(n, {Component{e, std::move(alpha), mult}});
}

// Direct summation of -sum chi1^{-1}(t) chi2^{-1}(1 - t), no histogram kernels.
CycInt naive_jacobi(const FqField& k, int n1, int e1, int n2, int e2) {
  MulChar a = MulChar(k, n1, e1).inverse(), b = MulChar(k, n2, e2).inverse();
  CycInt s;
  for (Elem t = 2; t < k.q(); ++t) s += char_eval(a, t) * char_eval(b, k.sub(1, t));
  return -s;
}

TameRep random_rep(testing::Gen& g, const FqField& k, int max_level = 12) {
  std::vector<int> levels;
  for (std::int64_t d : divisors(k.q() - 1)) {
    if (d <= max_level) levels.push_back(static_cast<int>(d));
  }
  int n = levels[g.range(0, static_cast<std::int64_t>(levels.size()) - 1)];
  std::vector<Component> comps;
  for (int i = 0, c = static_cast<int>(g.range(1, 3)); i < c; ++i) {
    CycInt num = CycInt::root_of_unity(n, g.range(0, n - 1)) * Integer(g.range(-2, 2) | 1);
    comps.push_back(Component{static_cast<int>(g.range(0, n - 1)), CycScalar(num, g.range(1, 3)), g.range(1, 2)});
  }
  return TameRep(n, std::move(comps));
}

// sigma -> sigma^u on inertia together with zeta -> zeta^u on scalars.
TameRep regauge(const TameRep& rep, int u) {
  std::vector<Component> comps;
  for (const Component& c : rep.components()) {
    comps.push_back(Component{static_cast<int>((std::int64_t{c.exponent} * u) % rep.level()),
                              c.alpha.galois(u), c.mult});
  }
  return TameRep(rep.level(), std::move(comps));
}

std::vector<std::pair<int, int>> test_fields() {
  return {{3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {13, 1}, {2, 4}, {5, 2}, {37, 1}, {61, 1}, {73, 1}, {181, 1}};
}

TEST(TableTest, F5QuadraticTable) {
  ConvolutionTable t = universal_table(FqField::create(5, 1), 2, 2);
  ASSERT_EQ(t.entries.size(), 4u);
  EXPECT_EQ(t.r, 2);
  EXPECT_EQ(t.at(0, 0).exponent, 0);
  EXPECT_EQ(t.at(0, 0).twist, CycScalar::one());
  EXPECT_EQ(t.at(0, 1).exponent, 1);
  EXPECT_EQ(t.at(0, 1).twist, CycScalar::one());
  EXPECT_EQ(t.at(1, 0).exponent, 1);
  EXPECT_EQ(t.at(1, 0).twist, CycScalar::one());
  EXPECT_EQ(t.at(1, 1).exponent, 0);
  EXPECT_EQ(t.at(1, 1).twist, integer_scalar(5));
}

TEST(TableTest, MixedLevels) {
  for (int q : {7, 13}) {
    ConvolutionTable t = universal_table(FqField::create(q, 1), 2, 3);
    EXPECT_EQ(t.entries.size(), 6u);
    EXPECT_EQ(t.r, 6);
    EXPECT_EQ(t.a1, 3);
    EXPECT_EQ(t.a2, 2);
    EXPECT_EQ(t.at(1, 1).exponent, 5);
  }
  EXPECT_THROW(universal_table(FqField::create(5, 1), 2, 3), std::invalid_argument);
}

TEST(TableTest, TwistsAgainstDirectJacobi) {
  for (auto [p, f] : test_fields()) {
    FqField k = FqField::create(p, f);
    for (std::int64_t n1 : divisors(k.q() - 1)) {
      if (n1 > 8) break;
      for (std::int64_t n2 : divisors(k.q() - 1)) {
        if (n2 > 8) break;
        ConvolutionTable t = universal_table(k, static_cast<int>(n1), static_cast<int>(n2));
        ASSERT_EQ(static_cast<std::int64_t>(t.entries.size()), n1 * n2);
        for (const TableEntry& en : t.entries) {
          ASSERT_EQ(en.exponent, (t.a1 * en.e1 + t.a2 * en.e2) % t.r);
          if (en.e1 == 0 || en.e2 == 0) {
            ASSERT_EQ(en.twist, CycScalar::one());
            continue;
          }
          CycInt j = naive_jacobi(k, static_cast<int>(n1), en.e1, static_cast<int>(n2), en.e2);
          ASSERT_EQ(en.twist * CycScalar(j), integer_scalar(static_cast<std::int64_t>(k.q())))
              << "q=" << k.q() << " (" << n1 << "," << en.e1 << ") (" << n2 << "," << en.e2 << ")";
        }
      }
    }
  }
}

TEST(ConvolveTest, Examples) {
  FqField f5 = FqField::create(5, 1);
  TameRep q = line(2, 1);
  EXPECT_EQ(convolve_arithmetic(f5, q, q), line(2, 0, integer_scalar(5)));

  CycScalar c = CycScalar(CycInt::root_of_unity(4, 1), 3);
  TameRep v(4, {Component{1, integer_scalar(2), 1}, Component{3, CycScalar::one(), 2}});
  TameRep scaled(4, {Component{1, integer_scalar(2) * c, 1}, Component{3, c, 2}});
  EXPECT_EQ(convolve_arithmetic(f5, v, line(1, 0, c)), scaled);
  EXPECT_EQ(convolve_arithmetic(f5, line(1, 0, c), v), scaled);

  TameRep r2(2, {Component{0, CycScalar::one(), 1}, Component{1, CycScalar::one(), 1}});
  TameRep r3(4, {Component{1, CycScalar::one(), 3}});
  EXPECT_EQ(convolve_arithmetic(f5, r2, r3).rank(), 6);

  EXPECT_THROW(convolve_arithmetic(f5, line(3, 1), q), std::invalid_argument);
}

TEST(ConvolveTest, TrivialProductPairCarriesWeightTwo) {
  // chi and chi^{-1} nontrivial with trivial product: unramified, |scalar|^2 = q^2.
  FqField k = FqField::create(13, 1);
  TameRep out = convolve_arithmetic(k, line(3, 1), line(3, 2));
  ASSERT_EQ(out.components().size(), 1u);
  EXPECT_EQ(out.components()[0].exponent, 0);
  EXPECT_EQ(out.components()[0].alpha.abs_squared(), integer_scalar(169));
}

TEST(ConvolveTest, GeometricAndMonodromy) {
  TameRep q = line(2, 1);
  EXPECT_EQ(convolve_geometric(q, q), line(2, 0));
  EXPECT_EQ(convolve_geometric(line(2, 1, integer_scalar(7)), TameRep::unit()), q);
  EXPECT_EQ(ts_monodromy(q, q), (std::map<RootOfUnity, std::int64_t>{{{1, 0}, 1}}));
  EXPECT_EQ(ts_monodromy(q, TameRep::unit()), monodromy_eigenvalues(q));
  EXPECT_EQ(ts_monodromy(line(3, 1), line(3, 2)), (std::map<RootOfUnity, std::int64_t>{{{1, 0}, 1}}));
}

TEST(ConvolveTest, PicardLefschetzExamples) {
  FqField f5 = FqField::create(5, 1);
  EXPECT_EQ(picard_lefschetz_demo(f5, 1), line(2, 1));
  EXPECT_EQ(picard_lefschetz_demo(f5, 2), line(2, 0, integer_scalar(5)));
  EXPECT_EQ(picard_lefschetz_demo(f5, 3), line(2, 1, integer_scalar(5)));
  // chi(-1) = -1 over F_7.
  EXPECT_EQ(picard_lefschetz_demo(FqField::create(7, 1), 2), line(2, 0, integer_scalar(-7)));
  EXPECT_THROW(picard_lefschetz_demo(FqField::create(2, 2), 2), std::invalid_argument);
  EXPECT_THROW(picard_lefschetz_demo(f5, 0), std::invalid_argument);
}

TEST(ConvolveTest, MonoidLaws) {
  testing::Gen g(21);
  for (auto [p, f] : test_fields()) {
    FqField k = FqField::create(p, f);
    Convolver conv(k);
    for (int iter = 0; iter < 40; ++iter) {
      TameRep a = random_rep(g, k), b = random_rep(g, k), c = random_rep(g, k);
      TameRep ab = conv.arithmetic(a, b);
      ASSERT_EQ(ab, conv.arithmetic(b, a));
      ASSERT_EQ(conv.arithmetic(ab, c), conv.arithmetic(a, conv.arithmetic(b, c))) << "q=" << k.q();
      ASSERT_EQ(conv.arithmetic(a, TameRep::unit()), a);
      ASSERT_EQ(conv.arithmetic(TameRep::unit(), a), a);
      ASSERT_EQ(ab.rank(), a.rank() * b.rank());
      ASSERT_EQ(erase_scalars(ab), convolve_geometric(a, b));
      ASSERT_EQ(convolve_geometric(a, b), erase_scalars(tensor(a, b)));
    }
  }
}

TEST(ConvolveTest, RankOneAgreesWithTable) {
  FqField k = FqField::create(37, 1);
  Convolver conv(k);
  for (int n1 : {2, 3, 4, 6}) {
    for (int n2 : {3, 4, 9}) {
      ConvolutionTable t = universal_table(k, n1, n2);
      for (const TableEntry& en : t.entries) {
        CycScalar a1 = CycScalar(CycInt::root_of_unity(n1, 1), 2);
        CycScalar a2 = integer_scalar(-3);
        ASSERT_EQ(conv.arithmetic(line(n1, en.e1, a1), line(n2, en.e2, a2)),
                  line(t.r, en.exponent, a1 * a2 * en.twist));
      }
    }
  }
}

TEST(ConvolveTest, GeneratorIndependence) {
  testing::Gen g(22);
  for (auto [p, f] : test_fields()) {
    FqField lo = FqField::create(p, f, GeneratorChoice::kSmallest);
    FqField hi = FqField::create(p, f, GeneratorChoice::kLargest);
    for (int iter = 0; iter < 20; ++iter) {
      TameRep a = random_rep(g, lo), b = random_rep(g, lo);
      ASSERT_EQ(to_json(convolve_arithmetic(lo, a, b)).dump(), to_json(convolve_arithmetic(hi, a, b)).dump());
    }
  }
}

TEST(ConvolveTest, RegaugeEquivariance) {
  // Replacing sigma by sigma^u permutes characters, and the twists follow by
  // the Galois action on their values.
  testing::Gen g(23);
  for (auto [p, f] : test_fields()) {
    FqField k = FqField::create(p, f);
    const int order = static_cast<int>(k.q() - 1);
    for (int iter = 0; iter < 20; ++iter) {
      int u;
      do {
        u = static_cast<int>(g.range(1, order));
      } while (std::gcd(u, order) != 1);
      TameRep a = random_rep(g, k), b = random_rep(g, k);
      ASSERT_EQ(convolve_arithmetic(k, regauge(a, u), regauge(b, u)), regauge(convolve_arithmetic(k, a, b), u));
    }
  }
}

TEST(ConvolveTest, SharedConvolverIsThreadSafe) {
  FqField k = FqField::create(61, 1);
  Convolver shared(k);
  testing::Gen g(24);
  std::vector<std::pair<TameRep, TameRep>> inputs;
  for (int i = 0; i < 64; ++i) inputs.emplace_back(random_rep(g, k), random_rep(g, k));
  std::vector<std::string> got(inputs.size());
#pragma omp parallel for
  for (int i = 0; i < static_cast<int>(inputs.size()); ++i) {
    got[i] = to_json(shared.arithmetic(inputs[i].first, inputs[i].second)).dump();
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    EXPECT_EQ(got[i], to_json(convolve_arithmetic(k, inputs[i].first, inputs[i].second)).dump());
  }
}

}  // namespace
}  // namespace tameconv
