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

#include <gtest/gtest.h>

#include <algorithm>

#include "tameconv/json_io.hpp"
#include "test_support.hpp"

namespace tameconv {
namespace {

CycScalar integer_scalar(std::int64_t v) { return CycScalar(CycInt::from_integer(v)); }

TameRep line(int n, int e, CycScalar alpha = CycScalar::one(), std::int64_t mult = 1) {
  return TameRep(n, {Component{e, std::move(alpha), mult}});
}

// Random rep built from raw components, possibly with repeats and scalars
// stored above their conductor.
std::vector<Component> random_components(testing::Gen& g, int n) {
  std::vector<Component> comps;
  const int count = static_cast<int>(g.range(1, 4));
  for (int i = 0; i < count; ++i) {
    CycInt num = CycInt::root_of_unity(n, g.range(0, n - 1)) * Integer(g.range(1, 2));
    if (g.range(0, 1)) num = num.embed(2 * n);
    comps.push_back(Component{static_cast<int>(g.range(-n, 2 * n)), CycScalar(num, g.range(1, 2)),
                              g.range(1, 2)});
  }
  return comps;
}

TameRep random_rep(testing::Gen& g, int max_level = 12) {
  int n = static_cast<int>(g.range(1, max_level));
  return TameRep(n, random_components(g, n));
}

// Replaces the chosen inertia generator sigma by sigma^a.
TameRep regauge(const TameRep& rep, int a) {
  std::vector<Component> comps = rep.components();
  for (Component& c : comps) c.exponent = static_cast<int>((static_cast<std::int64_t>(c.exponent) * a) % rep.level());
  return TameRep(rep.level(), std::move(comps));
}

std::map<RootOfUnity, std::int64_t> products(const std::map<RootOfUnity, std::int64_t>& a,
                                             const std::map<RootOfUnity, std::int64_t>& b) {
  std::map<RootOfUnity, std::int64_t> out;
  for (const auto& [x, mx] : a) {
    for (const auto& [y, my] : b) {
      int L = x.order * y.order;
      out[RootOfUnity::reduced(L, std::int64_t{x.exponent} * y.order + std::int64_t{y.exponent} * x.order)] +=
          mx * my;
    }
  }
  return out;
}

TEST(TameRepTest, RaiseLevelExamples) {
  TameRep q = line(2, 1);
  EXPECT_EQ(raise_level(q, 2), q);
  EXPECT_EQ(raise_level(q, 6), line(6, 3));
  EXPECT_EQ(raise_level(raise_level(q, 6), 12), raise_level(q, 12));
  EXPECT_THROW(raise_level(q, 3), std::invalid_argument);
}

TEST(TameRepTest, TensorExamples) {
  TameRep q = line(2, 1);
  EXPECT_EQ(tensor(q, TameRep::unit()), q);
  EXPECT_EQ(tensor(q, q), line(2, 0));
  EXPECT_EQ(tensor(line(3, 1), line(2, 1)), line(6, 5));
  TameRep a(3, {Component{1, integer_scalar(2), 2}, Component{2, integer_scalar(1), 1}});
  EXPECT_EQ(tensor(a, a).rank(), 9);
}

TEST(TameRepTest, EigenvalueExamples) {
  TameRep unr(1, {Component{0, integer_scalar(3), 2}, Component{0, integer_scalar(5), 1}});
  EXPECT_EQ(monodromy_eigenvalues(unr), (std::map<RootOfUnity, std::int64_t>{{{1, 0}, 3}}));
  EXPECT_EQ(monodromy_eigenvalues(line(2, 1)), (std::map<RootOfUnity, std::int64_t>{{{2, 1}, 1}}));
  // Eigenvalues are reported at their exact order.
  EXPECT_EQ(monodromy_eigenvalues(line(12, 4)), (std::map<RootOfUnity, std::int64_t>{{{3, 1}, 1}}));
}

TEST(TameRepTest, FrobeniusTraceExamples) {
  EXPECT_EQ(frobenius_trace(TameRep::unit()), CycScalar::one());
  CycScalar alpha = CycScalar(CycInt::root_of_unity(3, 1), 2);
  CycScalar beta = integer_scalar(-4);
  TameRep two(3, {Component{1, alpha, 1}, Component{2, beta, 1}});
  EXPECT_EQ(frobenius_trace(two), alpha + beta);
  CycScalar c = CycScalar(CycInt::root_of_unity(5, 2), 3);
  TameRep scaled(3, {Component{1, alpha * c, 1}, Component{2, beta * c, 1}});
  EXPECT_EQ(frobenius_trace(scaled), (frobenius_trace(two) * c).minimized());
}

TEST(TameRepTest, Validation) {
  EXPECT_THROW(TameRep(0, {}), std::invalid_argument);
  EXPECT_THROW(line(2, 1, CycScalar()), std::invalid_argument);
  EXPECT_THROW(line(2, 1, CycScalar::one(), 0), std::invalid_argument);
  EXPECT_EQ(line(4, -1), line(4, 3));
  EXPECT_EQ(line(4, 9), line(4, 1));
}

TEST(TameRepTest, CanonicalFormIsOrderIndependentAndIdempotent) {
  testing::Gen g(11);
  for (int iter = 0; iter < 400; ++iter) {
    int n = static_cast<int>(g.range(1, 12));
    std::vector<Component> comps = random_components(g, n);
    TameRep a(n, comps);
    std::shuffle(comps.begin(), comps.end(), g.engine());
    TameRep b(n, comps);
    ASSERT_EQ(to_json(a).dump(), to_json(b).dump());
    TameRep again(a.level(), a.components());
    ASSERT_EQ(to_json(again).dump(), to_json(a).dump());
    std::int64_t total = 0;
    for (const Component& c : comps) total += c.mult;
    ASSERT_EQ(a.rank(), total);
    for (std::size_t i = 0; i + 1 < a.components().size(); ++i) {
      const Component& x = a.components()[i];
      const Component& y = a.components()[i + 1];
      ASSERT_TRUE(x.exponent < y.exponent ||
                  (x.exponent == y.exponent && canonical_string(x.alpha) < canonical_string(y.alpha)));
    }
  }
}

TEST(TameRepTest, EqualScalarsMergeAcrossConductors) {
  // zeta_3 stored at conductor 3 and at conductor 6 is the same scalar.
  CycInt z = CycInt::root_of_unity(3, 1);
  TameRep a(3, {Component{1, z, 1}, Component{1, z.embed(6), 2}});
  ASSERT_EQ(a.components().size(), 1u);
  EXPECT_EQ(a.components()[0].mult, 3);
}

TEST(TameRepTest, TensorLaws) {
  testing::Gen g(12);
  for (int iter = 0; iter < 300; ++iter) {
    TameRep a = random_rep(g), b = random_rep(g), c = random_rep(g);
    ASSERT_EQ(tensor(a, b), tensor(b, a));
    ASSERT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
    ASSERT_EQ(tensor(a, TameRep::unit()), a);
    ASSERT_EQ(tensor(a, b).rank(), a.rank() * b.rank());
  }
}

TEST(TameRepTest, RaiseLevelCommutesWithTensorAndEigenvalues) {
  testing::Gen g(13);
  for (int iter = 0; iter < 300; ++iter) {
    TameRep a = random_rep(g, 6), b = random_rep(g, 6);
    int ka = static_cast<int>(g.range(1, 4)), kb = static_cast<int>(g.range(1, 4));
    TameRep ra = raise_level(a, a.level() * ka), rb = raise_level(b, b.level() * kb);
    ASSERT_EQ(monodromy_eigenvalues(ra), monodromy_eigenvalues(a));
    ASSERT_EQ(ra.rank(), a.rank());
    TameRep t = tensor(a, b);
    TameRep rt = tensor(ra, rb);
    ASSERT_EQ(raise_level(t, rt.level()), rt);
    ASSERT_EQ(monodromy_eigenvalues(t), products(monodromy_eigenvalues(a), monodromy_eigenvalues(b)));
  }
}

TEST(TameRepTest, RegaugeInvariance) {
  testing::Gen g(14);
  for (int iter = 0; iter < 300; ++iter) {
    TameRep a = random_rep(g), b = random_rep(g);
    int r = static_cast<int>(lcm64(a.level(), b.level()));
    int u;
    do {
      u = static_cast<int>(g.range(1, 4 * r));
    } while (std::gcd(u, r) != 1);
    ASSERT_EQ(tensor(regauge(a, u), regauge(b, u)), regauge(tensor(a, b), u));
    ASSERT_EQ(regauge(regauge(a, u), 1), regauge(a, u));
    ASSERT_EQ(frobenius_trace(regauge(a, u)), frobenius_trace(a));
  }
}

TEST(TameRepTest, EraseScalars) {
  TameRep a(2, {Component{1, integer_scalar(5), 1}, Component{1, integer_scalar(7), 2}});
  EXPECT_EQ(erase_scalars(a), line(2, 1, CycScalar::one(), 3));
}

TEST(JsonTest, RoundTrip) {
  testing::Gen g(15);
  for (int iter = 0; iter < 200; ++iter) {
    TameRep a = random_rep(g);
    Json j = to_json(a);
    ASSERT_EQ(tamerep_from_json(Json::parse(j.dump())), a);
    CycInt x = g.cycint(static_cast<int>(g.range(1, 30)), 1000);
    ASSERT_EQ(cycint_from_json(to_json(x)), x);
  }
  Integer big = Integer::parse("123456789012345678901234567890");
  EXPECT_TRUE(to_json(big).is_string());
  EXPECT_EQ(integer_from_json(to_json(big)), big);
  EXPECT_TRUE(to_json(Integer(-42)).is_number_integer());
}

TEST(JsonTest, Layout) {
  TameRep a(5, {Component{2, CycScalar(CycInt::root_of_unity(5, 1), 3), 1}});
  EXPECT_EQ(to_json(a).dump(),
            R"({"level":5,"components":[{"e":2,"alpha":{"num":{"m":5,"coeffs":[0,1,0,0]},"den":3},"mult":1}]})");
}

TEST(JsonTest, StrictReaders) {
  auto rep = [](const char* s) { return tamerep_from_json(Json::parse(s)); };
  EXPECT_EQ(rep(R"({"level":2,"components":[{"e":1,"alpha":5,"mult":1}]})"), line(2, 1, integer_scalar(5)));
  EXPECT_THROW(rep(R"({"level":2})"), std::invalid_argument);
  EXPECT_THROW(rep(R"({"level":2,"components":[],"extra":1})"), std::invalid_argument);
  EXPECT_THROW(rep(R"({"level":0,"components":[]})"), std::invalid_argument);
  EXPECT_THROW(rep(R"({"level":2,"components":[{"e":2,"alpha":1,"mult":1}]})"), std::invalid_argument);
  EXPECT_THROW(rep(R"({"level":2,"components":[{"e":1,"alpha":0,"mult":1}]})"), std::invalid_argument);
  EXPECT_THROW(rep(R"({"level":2,"components":[{"e":1,"alpha":1,"mult":0}]})"), std::invalid_argument);
  EXPECT_THROW(rep(R"({"level":2,"components":[{"e":1,"alpha":1}]})"), std::invalid_argument);
  EXPECT_THROW(rep(R"({"level":2,"components":[{"e":1,"alpha":1.5,"mult":1}]})"), std::invalid_argument);
  EXPECT_THROW(scalar_from_json(Json::parse(R"({"num":{"m":3,"coeffs":[1,0]},"den":0})")), std::invalid_argument);
  EXPECT_THROW(cycint_from_json(Json::parse(R"({"m":3,"coeffs":[1,0,0]})")), std::invalid_argument);
  EXPECT_THROW(cycint_from_json(Json::parse(R"({"m":3,"coeffs":["x",0]})")), std::invalid_argument);
}

}  // namespace
}  // namespace tameconv
