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

#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace tameconv {
namespace {

// All prime powers up to qmax as (p, f).
std::vector<std::pair<int, int>> prime_powers(int qmax) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= qmax; ++p) {
    if (!is_prime(p)) continue;
    int f = 1;
    for (std::int64_t q = p; q <= qmax; q *= p, ++f) out.emplace_back(p, f);
  }
  return out;
}

// Multiplicative order of a modulo p by repeated multiplication.
int naive_order(int a, int p) {
  int k = 1;
  for (int x = a % p; x != 1; x = x * a % p) ++k;
  return k;
}

TEST(FqFieldTest, PrimeFieldGenerators) {
  EXPECT_EQ(FqField::create(5, 1).generator(), 2u);
  EXPECT_EQ(FqField::create(7, 1).generator(), 3u);
  for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 101, 199}) {
    FqField k = FqField::create(p, 1);
    int smallest = 1;
    while (naive_order(smallest, p) != p - 1) ++smallest;
    EXPECT_EQ(k.generator(), static_cast<Elem>(smallest)) << p;
    EXPECT_EQ(k.anchor(), static_cast<Elem>(smallest));
    FqField alt = FqField::create(p, 1, GeneratorChoice::kLargest);
    int largest = p - 1;
    while (naive_order(largest, p) != p - 1) --largest;
    EXPECT_EQ(alt.generator(), static_cast<Elem>(largest)) << p;
    EXPECT_EQ(alt.anchor(), static_cast<Elem>(smallest));
  }
}

TEST(FqFieldTest, F4Modulus) {
  FqField k = FqField::create(2, 2);
  std::vector<int> want = {1, 1, 1};
  EXPECT_EQ(std::vector<int>(k.modulus().begin(), k.modulus().end()), want);
  // x * x = x + 1 in the encoding 2 -> x, 3 -> x + 1.
  EXPECT_EQ(k.mul(2, 2), 3u);
  EXPECT_EQ(k.add(2, 3), 1u);
  // Tr(x) = x + x^2 = x + x + 1 = 1.
  EXPECT_EQ(k.trace(k.generator()), 1);
  EXPECT_EQ(add_char_exponent(k, k.generator(), 1), 1);
}

TEST(FqFieldTest, Errors) {
  EXPECT_THROW(FqField::create(4, 1), std::invalid_argument);
  EXPECT_THROW(FqField::create(5, 0), std::invalid_argument);
  EXPECT_THROW(FqField::create(2, 17), std::invalid_argument);
  EXPECT_THROW(FqField::create(3, 3, GeneratorChoice::kSmallest, 26), std::invalid_argument);
  FqField k = FqField::create(7, 1);
  EXPECT_THROW(MulChar(k, 4, 1), std::invalid_argument);
  EXPECT_THROW(char_eval(MulChar(k, 3, 1), 0), std::invalid_argument);
  EXPECT_THROW(add_char_eval(k, 1, 0), std::invalid_argument);
  EXPECT_THROW(k.log(0), std::invalid_argument);
}

TEST(FqFieldTest, FieldAxiomsAndTables) {
  for (auto [p, f] : prime_powers(256)) {
    FqField k = FqField::create(p, f);
    const Elem q = k.q();
    std::set<Elem> seen;
    for (std::uint32_t i = 0; i + 1 < q; ++i) seen.insert(k.exp(i));
    ASSERT_EQ(seen.size(), q - 1u) << p << "^" << f;
    ASSERT_EQ(k.log(k.generator()), 1u % (q - 1));
    testing::Gen gen(p * 100 + f);
    for (int t = 0; t < 200; ++t) {
      Elem a = gen.range(1, q - 1), b = gen.range(1, q - 1), c = gen.range(0, q - 1);
      ASSERT_EQ(k.log(k.mul(a, b)), (k.log(a) + k.log(b)) % (q - 1));
      ASSERT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
      ASSERT_EQ(k.mul(a, k.inv(a)), 1u);
      ASSERT_EQ(k.add(c, k.neg(c)), 0u);
      // Frobenius is additive, and the trace lands in F_p.
      ASSERT_EQ(k.pow(k.add(a, c), p), k.add(k.pow(a, p), k.pow(c, p)));
      Elem tr = 0, y = c;
      for (int i = 0; i < f; ++i, y = k.pow(y, p)) tr = k.add(tr, y);
      ASSERT_EQ(static_cast<int>(tr), k.trace(c));
    }
  }
}

TEST(MulCharTest, SpecExamples) {
  FqField f5 = FqField::create(5, 1);
  EXPECT_EQ(char_eval(MulChar(f5, 2, 1), 2), CycInt::from_integer(-1, 2));
  for (Elem x = 1; x < 5; ++x) EXPECT_EQ(char_eval(MulChar::trivial(f5), x), CycInt::from_integer(1));
  EXPECT_EQ(char_eval(MulChar(f5, 4, 3), 1), CycInt::from_integer(1));
  EXPECT_EQ(add_char_eval(f5, 0, 3), CycInt::from_integer(1));
}

TEST(MulCharTest, QuadraticCharacterIsLegendreSymbol) {
  for (int p : {3, 5, 7, 11, 13, 101, 199}) {
    FqField k = FqField::create(p, 1);
    std::set<int> squares;
    for (int y = 1; y < p; ++y) squares.insert(y * y % p);
    MulChar chi(k, 2, 1);
    for (int x = 1; x < p; ++x) {
      int want = squares.count(x) ? 1 : -1;
      ASSERT_EQ(char_eval(chi, x), CycInt::from_integer(want)) << p << " " << x;
    }
  }
}

TEST(MulCharTest, MultiplicativityAndOrthogonality) {
  for (auto [p, f] : prime_powers(200)) {
    FqField k = FqField::create(p, f);
    const int qm1 = static_cast<int>(k.q()) - 1;
    testing::Gen gen(p * 7 + f);
    for (std::int64_t n : divisors(qm1)) {
      for (int e = 0; e < n; ++e) {
        MulChar chi(k, static_cast<int>(n), e);
        for (int t = 0; t < 20; ++t) {
          Elem a = gen.range(1, qm1), b = gen.range(1, qm1);
          ASSERT_EQ(char_eval(chi, k.mul(a, b)), char_eval(chi, a) * char_eval(chi, b));
        }
        RootSum total(static_cast<int>(n));
        for (Elem x = 1; x <= static_cast<Elem>(qm1); ++x) total.add(chi.exponent_at(x), 1);
        ASSERT_EQ(total.vanishes(), e != 0) << p << "^" << f << " " << n << ":" << e;
      }
    }
    RootSum psi(p);
    for (Elem x = 0; x <= static_cast<Elem>(qm1); ++x) psi.add(add_char_exponent(k, x, 1), 1);
    ASSERT_TRUE(psi.vanishes());
  }
}

TEST(MulCharTest, PowerFiberIdentity) {
  for (auto [p, f] : prime_powers(128)) {
    FqField k = FqField::create(p, f);
    const int qm1 = static_cast<int>(k.q()) - 1;
    for (std::int64_t n : divisors(qm1)) {
      if (n > 12) break;
      std::vector<int> fiber(k.q(), 0);
      for (Elem y = 1; y < k.q(); ++y) ++fiber[k.pow(y, n)];
      for (Elem u = 1; u < k.q(); ++u) {
        CycInt s = CycInt::zero(static_cast<int>(n));
        for (int e = 0; e < n; ++e) s += char_eval(MulChar(k, static_cast<int>(n), e), u);
        ASSERT_EQ(s, CycInt::from_integer(fiber[u])) << p << "^" << f << " n=" << n;
      }
    }
  }
}

TEST(MulCharTest, ValuesIndependentOfGenerator) {
  for (auto [p, f] : prime_powers(200)) {
    FqField a = FqField::create(p, f, GeneratorChoice::kSmallest);
    FqField b = FqField::create(p, f, GeneratorChoice::kLargest);
    for (std::int64_t n : divisors(a.q() - 1)) {
      for (Elem x = 1; x < a.q(); ++x) {
        ASSERT_EQ(a.mu_index(x, n), b.mu_index(x, n));
      }
    }
  }
}

TEST(MulCharTest, ProductAndReduction) {
  FqField k = FqField::create(13, 1);
  MulChar a(k, 3, 1), b(k, 4, 1);
  MulChar ab = a * b;
  EXPECT_EQ(ab.order(), 12);
  EXPECT_EQ(ab.exponent(), 7);
  EXPECT_EQ(MulChar(k, 6, 2).reduced().order(), 3);
  EXPECT_EQ(MulChar(k, 6, 2), MulChar(k, 3, 1));
  EXPECT_TRUE((MulChar(k, 2, 1) * MulChar(k, 2, 1)).is_trivial());
  for (Elem x = 1; x < 13; ++x) {
    EXPECT_EQ(char_eval(ab, x), char_eval(a, x) * char_eval(b, x));
  }
}

TEST(FqFieldTest, EmbeddingIsRingHomomorphism) {
  for (auto [p, f, m] : std::vector<std::tuple<int, int, int>>{{2, 1, 4}, {2, 2, 4}, {3, 1, 2}, {5, 1, 2}, {3, 2, 4}, {7, 1, 2}}) {
    FqField k = FqField::create(p, f);
    FqField ext = FqField::create(p, f * m);
    auto emb = k.embedding_into(ext);
    for (Elem a = 0; a < k.q(); ++a) {
      for (Elem b = 0; b < k.q(); ++b) {
        ASSERT_EQ(emb[k.add(a, b)], ext.add(emb[a], emb[b]));
        ASSERT_EQ(emb[k.mul(a, b)], ext.mul(emb[a], emb[b]));
      }
    }
  }
}

}  // namespace
}  // namespace tameconv
