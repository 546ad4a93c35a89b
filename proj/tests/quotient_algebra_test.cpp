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

#include "sepdef/quotient_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

#include "sepdef/errors.hpp"

namespace sepdef {
namespace {

struct Setup {
  int n;
  int check_prec;
  QuotientCtx ctx;
  IdempotentSet idems;
};

Setup make_setup(int n, int m = 0) {
  auto field = GFContext::make(field_degree_for(n));
  const int half = 1 << (n - 2);
  if (m == 0) m = half;
  const int check = 8 * m + 2 * half + 16;
  const int prec = check + 4 * (m + half) + 32;
  auto ctx = QuotientCtx::build({n, m, field->one(), field->g(), field, prec});
  auto idems = crt_idempotents(ctx);
  return {n, check, std::move(ctx), std::move(idems)};
}

const Setup& setup(int n) {
  static const Setup s3 = make_setup(3);
  static const Setup s4 = make_setup(4);
  static const Setup s5 = make_setup(5);
  return n == 3 ? s3 : n == 4 ? s4 : s5;
}

LaurentSeries mono(const FieldPtr& f, GFElement c, int e, int prec) {
  return LaurentSeries::monomial(f, c, e, prec);
}

// Independent evaluation of f_t(c) = (1 + b t c + d c^2) prod_a (c^2 + a t c + 1)
// + c^2 + 1 using only scalar series arithmetic.
LaurentSeries f_at(int n, const LaurentSeries& b, const LaurentSeries& d,
                   const LaurentSeries& c) {
  const auto& field = c.field();
  const int prec = c.precision();
  const auto one = LaurentSeries::one(field, prec);
  const auto t = mono(field, field->one(), 1, prec);
  LaurentSeries value = one + b * t * c + d * c * c;
  for (GFElement a : gf_subfield_units(*field, n - 2)) {
    value = value * (c * c + mono(field, a, 1, prec) * c + one);
  }
  return value + c * c + one;
}

class PerN : public ::testing::TestWithParam<int> {};

TEST(SolveBd, ValuationOfBAtN4M4) {
  auto field = GFContext::make(2);
  const auto sol = solve_bd(4, 4, field->one(), field->g(), field, 80);
  EXPECT_EQ(sol.b.valuation(), 0);
  EXPECT_EQ(sol.b.leading_coefficient(), field->one() + field->g());
  EXPECT_TRUE(is_one_unit(sol.d));
  EXPECT_EQ(sol.determinant.valuation(), 5);
}

TEST(SolveBd, RootsOfFAtN3) {
  auto field = GFContext::make(2);
  const int prec = 60;
  const auto sol = solve_bd(3, 2, field->one(), field->g(), field, prec);
  const auto one = LaurentSeries::one(field, prec);
  EXPECT_EQ(residual_valuation(sol.c1, one + mono(field, field->one(), 2, prec)),
            prec);
  EXPECT_EQ(residual_valuation(sol.c2, one + mono(field, field->g(), 2, prec)),
            prec);
  const int check = prec - 3 * 2 - 8;
  for (const auto& c : {sol.c1, sol.c2}) {
    const auto r = f_at(3, sol.b, sol.d, c);
    EXPECT_TRUE(r.is_zero());
    EXPECT_GE(r.precision(), check);
  }
}

TEST(SolveBd, ValuationOfBTracksM) {
  for (int n = 3; n <= 5; ++n) {
    auto field = GFContext::make(field_degree_for(n));
    const int half = 1 << (n - 2);
    for (int m = half; m <= half + 3; ++m) {
      const auto sol = solve_bd(n, m, field->one(), field->g(), field, 8 * m + 64);
      EXPECT_EQ(sol.b.valuation(), m - half) << "n=" << n << " m=" << m;
      EXPECT_EQ(sol.b.leading_coefficient(), field->one() + field->g());
      EXPECT_TRUE(is_one_unit(sol.d));
      for (const auto& c : {sol.c1, sol.c2}) {
        EXPECT_TRUE(f_at(n, sol.b, sol.d, c).is_zero());
      }
    }
  }
}

TEST(SolveBd, Errors) {
  auto field = GFContext::make(2);
  EXPECT_THROW(solve_bd(4, 3, field->one(), field->g(), field, 60),
               PreconditionError);
  EXPECT_THROW(solve_bd(3, 2, field->zero(), field->g(), field, 60),
               PreconditionError);
  EXPECT_THROW(solve_bd(3, 2, field->g(), field->g(), field, 60),
               SingularSystem);
  EXPECT_THROW(solve_bd(3, 2, field->one(), field->g(), field, 2),
               InsufficientPrecision);
}

TEST(EtaBuild, RejectsWrongConstantTerm) {
  auto field = GFContext::make(2);
  const auto one = LaurentSeries::one(field, 20);
  const Poly p(field, {one + mono(field, field->one(), 1, 20), one, one});
  const Poly pi(field, {one, one, one});
  EXPECT_THROW(eta_build(p, pi), PreconditionError);
}

TEST(EtaBuild, DegreeBeforeReduction) {
  const auto& s = setup(4);
  // (p_t + 1)/x has degree deg p_t - 1 = dim - 1, so no reduction happens.
  EXPECT_EQ(s.ctx.p().degree(), s.ctx.dim());
  EXPECT_EQ(s.ctx.eta_poly().degree(), s.ctx.dim() - 1);
}

TEST_P(PerN, EtaAtZeroIsInverseOfX) {
  const auto& s = setup(GetParam());
  const auto eta0 = s.ctx.eta_poly().specialize_t0();
  ASSERT_EQ(static_cast<int>(eta0.size()), s.ctx.dim());
  for (int i = 0; i < s.ctx.dim() - 1; ++i) EXPECT_TRUE(eta0[i].is_zero());
  EXPECT_EQ(eta0[s.ctx.dim() - 1], s.ctx.field()->one());
}

TEST(QuotientMul, MatchesDivmod) {
  const auto& s = setup(4);
  const int dim = s.ctx.dim();
  const auto prod = s.ctx.mul(s.ctx.x_power(1), s.ctx.x_power(dim - 1));
  std::vector<LaurentSeries> xd(dim + 1, LaurentSeries::exact_zero(s.ctx.field()));
  xd[dim] = LaurentSeries::one(s.ctx.field(), s.ctx.precision());
  const Poly r = poly_divmod(Poly(s.ctx.field(), xd), s.ctx.pi()).remainder;
  for (int i = 0; i < dim; ++i) {
    EXPECT_TRUE((prod[i] - r.coefficient(i, s.ctx.precision())).is_zero());
  }
  const auto u = s.ctx.x_power(3);
  EXPECT_GE((s.ctx.mul(s.ctx.one(), u) - u).valuation(), s.check_prec);
}

TEST(Idempotents, ToyModulus) {
  // In k[x]/(x(x+1)) the idempotents are x + 1 (at 0) and x (at 1).
  auto field = GFContext::make(2);
  const auto one = LaurentSeries::one(field, 30);
  const auto zero = LaurentSeries::exact_zero(field);
  const Poly f0(field, {zero, one});
  const Poly f1(field, {one, one});
  const Poly e0 = f1 * poly_inverse_mod(f1, f0, 15);
  const Poly e1 = f0 * poly_inverse_mod(f0, f1, 15);
  ASSERT_EQ(e0.degree(), 1);
  ASSERT_EQ(e1.degree(), 1);
  EXPECT_EQ(e0[0].coefficient(0), field->one());
  EXPECT_EQ(e0[1].coefficient(0), field->one());
  EXPECT_TRUE(e1[0].is_zero());
  EXPECT_EQ(e1[1].coefficient(0), field->one());
}

TEST_P(PerN, IdempotentAxioms) {
  const auto& s = setup(GetParam());
  const auto all = s.idems.all();
  ASSERT_EQ(static_cast<int>(all.size()), 2 + (1 << (s.n - 2)) - 1);
  QElement sum = s.ctx.zero();
  for (std::size_t i = 0; i < all.size(); ++i) {
    sum = sum + all[i];
    EXPECT_GE((s.ctx.mul(all[i], all[i]) - all[i]).valuation(), s.check_prec);
    EXPECT_FALSE(all[i].is_zero());
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      EXPECT_GE(s.ctx.mul(all[i], all[j]).valuation(), s.check_prec);
    }
  }
  EXPECT_GE((sum - s.ctx.one()).valuation(), s.check_prec);
}

TEST_P(PerN, IdempotentDenominators) {
  const auto& s = setup(GetParam());
  const int half = 1 << (s.n - 2);
  EXPECT_GE(s.idems.e_c1.valuation(), -(s.ctx.m() + half - 1));
  EXPECT_GE(s.idems.e_c2.valuation(), -(s.ctx.m() + half - 1));
  for (const auto& la : s.idems.e_a) EXPECT_GE(la.e.valuation(), -(half - 1));
}

TEST_P(PerN, IdempotentsSplitTheFactors) {
  const auto& s = setup(GetParam());
  const auto& ctx = s.ctx;
  const auto x = ctx.x_power(1);
  EXPECT_GE((ctx.mul(x, s.idems.e_c1) - ctx.c1() * s.idems.e_c1).valuation(),
            s.check_prec);
  EXPECT_GE((ctx.mul(x, s.idems.e_c2) - ctx.c2() * s.idems.e_c2).valuation(),
            s.check_prec);
  for (const auto& la : s.idems.e_a) {
    const auto q = ctx.from_poly(quadratic_factor(la.a, ctx.field(), ctx.precision()));
    EXPECT_GE(ctx.mul(q, la.e).valuation(), s.check_prec);
    // p_t vanishes on the quadratic components.
    EXPECT_GE(ctx.mul(ctx.from_poly(ctx.p()), la.e).valuation(), s.check_prec);
  }
}

TEST_P(PerN, EtaFixesIdempotents) {
  const auto& s = setup(GetParam());
  for (const auto& e : s.idems.all()) {
    EXPECT_GE((s.ctx.eta(e) - e).valuation(), s.check_prec);
  }
}

TEST_P(PerN, EtaOnQuadraticComponents) {
  const auto& s = setup(GetParam());
  const auto& ctx = s.ctx;
  const auto x = ctx.x_power(1);
  for (const auto& la : s.idems.e_a) {
    const auto xe = ctx.mul(x, la.e);
    const auto at = mono(ctx.field(), la.a, 1, ctx.precision());
    const auto expected = xe + at * la.e;
    EXPECT_GE((ctx.eta(xe) - expected).valuation(), s.check_prec);
    EXPECT_GE((ctx.eta(ctx.eta(xe)) - xe).valuation(), s.check_prec);
  }
}

TEST_P(PerN, EtaIsAnInvolution) {
  const auto& s = setup(GetParam());
  for (int i = 0; i < s.ctx.dim(); ++i) {
    const auto u = s.ctx.x_power(i);
    EXPECT_GE((s.ctx.eta(s.ctx.eta(u)) - u).valuation(), s.check_prec) << i;
  }
}

TEST_P(PerN, EtaPreservesFactorIdeals) {
  const auto& s = setup(GetParam());
  const auto& ctx = s.ctx;
  const auto& field = ctx.field();
  const Poly& et = ctx.eta_poly();
  const auto one = LaurentSeries::one(field, ctx.precision());
  for (const auto& c : {ctx.c1(), ctx.c2()}) {
    const Poly lin(field, {c, one});
    const Poly r = poly_divmod(et + Poly::constant(c), lin).remainder;
    EXPECT_GE(r.is_zero() ? INT32_MAX : r.min_valuation(), s.check_prec);
  }
  for (GFElement a : ctx.labels()) {
    const Poly q = quadratic_factor(a, field, ctx.precision());
    const Poly image = et * et + mono(field, a, 1, ctx.precision()) * et +
                       Poly::constant(one);
    const Poly r = poly_divmod(image, q).remainder;
    if (!r.is_zero()) {
      for (int i = 0; i <= r.degree(); ++i) {
        EXPECT_TRUE(r[i].is_zero());
        EXPECT_GE(r[i].precision(), s.check_prec);
      }
    }
  }
}

TEST_P(PerN, EtaIsMultiplicative) {
  const auto& s = setup(GetParam());
  const auto& ctx = s.ctx;
  std::mt19937_64 rng(0x5eed + s.n);
  auto random_element = [&] {
    QElement u = ctx.zero();
    for (int i = 0; i < ctx.dim(); ++i) {
      std::vector<GFElement> coeffs(6);
      for (auto& c : coeffs) c = GFElement{static_cast<uint32_t>(rng() % ctx.field()->size())};
      u[i] = LaurentSeries::polynomial(ctx.field(), coeffs, ctx.precision());
    }
    return u;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_element();
    const auto v = random_element();
    const auto lhs = ctx.eta(ctx.mul(u, v));
    const auto rhs = ctx.mul(ctx.eta(u), ctx.eta(v));
    EXPECT_GE((lhs - rhs).valuation(), s.check_prec);
  }
}

TEST(Da, SmallCases) {
  auto f4 = GFContext::make(2);
  const int prec = 40;
  const auto one = LaurentSeries::one(f4, prec);
  EXPECT_EQ(residual_valuation(da_by_remainder(3, f4->one(), f4, prec), one), prec);
  EXPECT_EQ(residual_valuation(da_by_recursion(3, f4->one(), f4, prec), one), prec);
  for (GFElement a : gf_enumerate_units(*f4)) {
    const auto expected = mono(f4, f4->mul(a, a), 2, prec) + one;
    EXPECT_EQ(residual_valuation(da_by_remainder(4, a, f4, prec), expected), prec);
    EXPECT_EQ(residual_valuation(da_by_recursion(4, a, f4, prec), expected), prec);
  }
  auto f8 = GFContext::make(3);
  for (GFElement a : gf_enumerate_units(*f8)) {
    const auto at = mono(f8, a, 1, prec);
    const auto expected = pow(at, 6) + pow(at, 4) + LaurentSeries::one(f8, prec);
    EXPECT_EQ(residual_valuation(da_by_remainder(5, a, f8, prec), expected), prec);
    EXPECT_EQ(residual_valuation(da_by_recursion(5, a, f8, prec), expected), prec);
  }
}

TEST(Da, RejectsLabelOutsideSubfield) {
  auto f16 = GFContext::make(4);
  EXPECT_THROW(da_by_recursion(4, f16->g(), f16, 30), ConsistencyError);
}

TEST_P(PerN, DaAgreesWithQuotient) {
  const auto& s = setup(GetParam());
  for (GFElement a : s.ctx.labels()) {
    const auto da = compute_da(a, s.ctx, s.idems, s.check_prec);
    EXPECT_FALSE(da.is_zero());
    EXPECT_GE(da.valuation(), 0);
  }
}

TEST(QuotientCtx, TruncationAgreesOnIntegralProducts) {
  const auto& s = setup(4);
  const auto small = s.ctx.truncated(5);
  const auto u = s.ctx.x_power(5);
  const auto v = s.ctx.x_power(6);
  const auto full = s.ctx.mul(u, v);
  const auto cut = small.mul(u.truncated(5), v.truncated(5));
  EXPECT_GE((full.truncated(5) - cut).valuation(), 5);
}

INSTANTIATE_TEST_SUITE_P(N, PerN, ::testing::Values(3, 4, 5));

}  // namespace
}  // namespace sepdef
