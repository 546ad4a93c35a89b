/*
 * Copyright 2026 The sepdef Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sepdef/laurent.hpp"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "sepdef/detail/series_kernel.hpp"
#include "sepdef/errors.hpp"

namespace sepdef {
namespace {

class LaurentTest : public ::testing::Test {
 protected:
  FieldPtr f4_ = GFContext::make(2);
  const GFElement one_{1}, g_{2}, g1_{3};

  LaurentSeries Poly(std::vector<std::uint32_t> bits, int prec,
                     int val = 0) const {
    std::vector<GFElement> c;
    for (auto b : bits) c.emplace_back(b);
    return LaurentSeries(f4_, val, std::move(c), prec);
  }
};

TEST_F(LaurentTest, AddExamples) {
  const auto a = Poly({1, 1}, 10);
  const auto sum = a + a;
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(sum.precision(), 10);

  const auto b = LaurentSeries::one(f4_, 10) + LaurentSeries::monomial(f4_, one_, 1, 10);
  EXPECT_EQ(b.valuation(), 0);
  EXPECT_EQ(b.coefficient(0), one_);
  EXPECT_EQ(b.coefficient(1), one_);
  EXPECT_EQ(b.coefficient(2), GFElement());

  const auto c = Poly({1, 1}, 10, -1) + LaurentSeries::one(f4_, 10);
  EXPECT_EQ(c.valuation(), -1);
  EXPECT_EQ(c.coefficient(-1), one_);
  EXPECT_EQ(c.coefficient(0), GFElement());
}

TEST_F(LaurentTest, AddUsesMinimumPrecision) {
  const auto a = Poly({1}, 5);
  const auto b = Poly({1, 1}, 9);
  EXPECT_EQ((a + b).precision(), 5);
}

TEST_F(LaurentTest, MulExamples) {
  const auto t = LaurentSeries::monomial(f4_, one_, 1, 12);
  const auto t2 = t * t;
  EXPECT_EQ(t2.valuation(), 2);
  EXPECT_EQ(t2.precision(), 13);
  EXPECT_EQ(t2.coefficient(2), one_);

  const auto a = Poly({1, 1}, 12);
  const auto sq = a * a;
  EXPECT_EQ(sq.coefficient(0), one_);
  EXPECT_EQ(sq.coefficient(1), GFElement());
  EXPECT_EQ(sq.coefficient(2), one_);
  EXPECT_EQ(sq.precision(), 12);

  const auto tinv = LaurentSeries::monomial(f4_, one_, -1, 12);
  const auto prod = tinv * t;
  EXPECT_EQ(prod.valuation(), 0);
  EXPECT_EQ(prod.coefficient(0), one_);
  EXPECT_EQ(prod.precision(), 11);
}

TEST_F(LaurentTest, MulPrecisionFormula) {
  const auto a = Poly({1, 2, 3}, 7, -2);  // val -2, prec 7
  const auto b = Poly({3, 1}, 20, 3);     // val 3, prec 20
  const auto p = a * b;
  EXPECT_EQ(p.valuation(), 1);
  EXPECT_EQ(p.precision(), std::min(7 + 3, 20 - 2));
}

TEST_F(LaurentTest, InvertExamples) {
  const auto one = LaurentSeries::one(f4_, 16);
  const auto inv1 = inverse(one);
  EXPECT_TRUE((inv1 - one).is_zero());

  // (1 + t)^{-1} = 1 + t + t^2 + ... in characteristic 2.
  const auto inv = inverse(Poly({1, 1}, 16));
  EXPECT_EQ(inv.precision(), 16);
  for (int i = 0; i < 16; ++i) EXPECT_EQ(inv.coefficient(i), one_) << i;

  // t^2 (1 + t): multiply back, the residual vanishes to the product's
  // precision.
  const auto a = Poly({1, 1}, 18, 2);
  const auto ainv = inverse(a);
  EXPECT_EQ(ainv.valuation(), -2);
  const auto back = a * ainv;
  const auto residual = back - LaurentSeries::one(f4_, 100);
  EXPECT_GE(residual.valuation(), back.precision());
  EXPECT_EQ(back.precision(), 16);
}

TEST_F(LaurentTest, InvertZeroThrows) {
  EXPECT_THROW(inverse(LaurentSeries::zero(f4_, 8)), InsufficientPrecision);
}

TEST_F(LaurentTest, OneUnitExamples) {
  EXPECT_TRUE(is_one_unit(Poly({1, 0, 0, 0, 1}, 10)));
  EXPECT_FALSE(is_one_unit(LaurentSeries::monomial(f4_, one_, 1, 10)));
  EXPECT_FALSE(is_one_unit(Poly({2, 1}, 10)));  // g + t
  EXPECT_FALSE(is_one_unit(LaurentSeries::zero(f4_, 10)));
}

TEST_F(LaurentTest, CoefficientPastPrecisionThrows) {
  EXPECT_THROW(Poly({1}, 3).coefficient(3), InsufficientPrecision);
}

TEST_F(LaurentTest, ToString) {
  EXPECT_EQ(to_string(Poly({1, 0, 3}, 4)), "1 + (g+1)*t^2 + O(t^4)");
  EXPECT_EQ(to_string(LaurentSeries::zero(f4_, 3)), "0 + O(t^3)");
}

// Naive Cauchy product oracle, written against gf_mul only.
std::vector<GFElement> NaiveProduct(const GFContext& f,
                                    const std::vector<GFElement>& a,
                                    const std::vector<GFElement>& b,
                                    std::size_t len) {
  std::vector<GFElement> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      if (i < a.size() && k - i < b.size()) out[k] += gf_mul(a[i], b[k - i], f);
    }
  }
  return out;
}

TEST(SeriesKernelTest, ClmulKernelMatchesNaiveProduct) {
  std::mt19937_64 rng(11);
  for (int s = 1; s <= 8; ++s) {
    GFContext f(s);
    std::uniform_int_distribution<std::uint32_t> coeff(0, f.size() - 1);
    for (std::size_t len : {1u, 3u, 12u, 13u, 31u, 64u, 65u, 150u, 301u}) {
      std::vector<GFElement> a(len), b(len);
      for (auto& x : a) x = GFElement(coeff(rng));
      for (auto& x : b) x = GFElement(coeff(rng));
      const auto want = NaiveProduct(f, a, b, len);
      std::vector<GFElement> got(len);
      detail::truncated_product_clmul(f, a, b, got);
      ASSERT_EQ(got, want) << "s=" << s << " len=" << len;
      detail::truncated_product_schoolbook(f, a, b, got);
      ASSERT_EQ(got, want) << "s=" << s << " len=" << len;
    }
  }
}

TEST(SeriesKernelTest, UnequalLengths) {
  GFContext f(3);
  std::vector<GFElement> a{GFElement(1), GFElement(5), GFElement(7)};
  std::vector<GFElement> b(40, GFElement(3));
  const auto want = NaiveProduct(f, a, b, 40);
  std::vector<GFElement> got(40);
  detail::truncated_product(f, a, b, got);
  EXPECT_EQ(got, want);
}

// Random 1-units 1 + t(...) over GF(2^s) at precision `prec`.
LaurentSeries RandomOneUnit(const FieldPtr& f, int prec, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, f->size() - 1);
  std::vector<GFElement> c(prec);
  c[0] = f->one();
  for (int i = 1; i < prec; ++i) c[i] = GFElement(coeff(rng));
  return LaurentSeries(f, 0, std::move(c), prec);
}

TEST(LaurentPropertyTest, OneUnitGroupClosure) {
  std::mt19937_64 rng(3);
  for (int s : {2, 3, 4}) {
    const auto f = GFContext::make(s);
    for (int trial = 0; trial < 50; ++trial) {
      const auto u = RandomOneUnit(f, 40, rng);
      const auto v = RandomOneUnit(f, 40, rng);
      EXPECT_TRUE(is_one_unit(u * v));
      const auto ui = inverse(u);
      EXPECT_TRUE(is_one_unit(ui));
      EXPECT_TRUE((u * ui - LaurentSeries::one(f, 40)).is_zero());
    }
  }
}

// u^2 + a t u + 1 lies in a t U for every 1-unit u and nonzero a.
TEST(LaurentPropertyTest, QuadraticAtOneUnitIsAtTimesOneUnit) {
  std::mt19937_64 rng(5);
  for (int s : {2, 3, 4}) {
    const auto f = GFContext::make(s);
    for (GFElement a : gf_enumerate_units(*f)) {
      const auto at = LaurentSeries::monomial(f, a, 1, 64);
      for (int trial = 0; trial < 20; ++trial) {
        const auto u = RandomOneUnit(f, 64, rng);
        const auto value = u * u + at * u + LaurentSeries::one(f, 64);
        const auto cofactor = value / at;
        EXPECT_TRUE(is_one_unit(cofactor));
      }
    }
  }
}

TEST(LaurentPropertyTest, InverseIsTwoSided) {
  std::mt19937_64 rng(9);
  const auto f = GFContext::make(3);
  std::uniform_int_distribution<std::uint32_t> coeff(0, 7);
  std::uniform_int_distribution<int> val(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<GFElement> c(30);
    for (auto& x : c) x = GFElement(coeff(rng));
    c[0] = GFElement(1 + coeff(rng) % 7);
    const int v = val(rng);
    const LaurentSeries a(f, v, c, v + 30);
    const auto ai = inverse(a);
    EXPECT_EQ(ai.valuation(), -v);
    const auto prod = a * ai;
    EXPECT_TRUE((prod - LaurentSeries::one(f, 1000)).is_zero());
    EXPECT_EQ(prod.precision(), 30);
  }
}

}  // namespace
}  // namespace sepdef
