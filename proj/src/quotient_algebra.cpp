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

#include <algorithm>
#include <climits>
#include <string>

#include "sepdef/errors.hpp"

namespace sepdef {

namespace {

bool is_exact_zero(const LaurentSeries& s) {
  return s.is_zero() && s.precision() >= kExactPrecision / 2;
}

}  // namespace

// --- QElement ---------------------------------------------------------------

int QElement::valuation() const {
  int v = INT_MAX;
  for (const auto& c : coeffs_) v = std::min(v, c.valuation());
  return v;
}

int QElement::precision() const {
  int p = INT_MAX;
  for (const auto& c : coeffs_) p = std::min(p, c.precision());
  return p;
}

bool QElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const LaurentSeries& c) { return c.is_zero(); });
}

QElement QElement::truncated(int prec) const {
  std::vector<LaurentSeries> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.truncated(prec));
  return QElement(std::move(out));
}

QElement operator+(const QElement& u, const QElement& v) {
  std::vector<LaurentSeries> out;
  out.reserve(u.coeffs_.size());
  for (std::size_t i = 0; i < u.coeffs_.size(); ++i) {
    if (is_exact_zero(u.coeffs_[i])) {
      out.push_back(v.coeffs_[i]);
    } else if (is_exact_zero(v.coeffs_[i])) {
      out.push_back(u.coeffs_[i]);
    } else {
      out.push_back(u.coeffs_[i] + v.coeffs_[i]);
    }
  }
  return QElement(std::move(out));
}

QElement operator*(const LaurentSeries& c, const QElement& u) {
  std::vector<LaurentSeries> out;
  out.reserve(u.coeffs_.size());
  for (const auto& x : u.coeffs_) {
    out.push_back(is_exact_zero(x) ? x : c * x);
  }
  return QElement(std::move(out));
}

// --- Root construction --------------------------------------------------------

BDSolution solve_bd(int n, int m, GFElement alpha1, GFElement alpha2,
                    const FieldPtr& field, int prec) {
  const int half_dim = 1 << (n - 2);
  if (m < half_dim) {
    throw PreconditionError("m = " + std::to_string(m) + " is below 2^(n-2) = " +
                            std::to_string(half_dim));
  }
  field->check(alpha1);
  field->check(alpha2);
  if (alpha1.is_zero() || alpha2.is_zero()) {
    throw PreconditionError("alpha1 and alpha2 must be nonzero");
  }
  if (alpha1 == alpha2) {
    throw SingularSystem("alpha1 == alpha2 makes the 2x2 system singular");
  }

  const Poly mu = build_mu(n, field, prec);
  const auto one = LaurentSeries::one(field, prec);
  const GFElement alphas[2] = {alpha1, alpha2};
  LaurentSeries c[2], lhs_d[2], lhs_b[2], rhs[2];
  for (int i = 0; i < 2; ++i) {
    const GFElement sq = field->mul(alphas[i], alphas[i]);
    c[i] = one + LaurentSeries::monomial(field, alphas[i], m, prec);
    lhs_d[i] = one + LaurentSeries::monomial(field, sq, 2 * m, prec);
    lhs_b[i] = c[i].shifted(1);
    rhs[i] = LaurentSeries::monomial(field, sq, 2 * m, prec) / mu.eval(c[i]) + one;
  }

  const LaurentSeries det = lhs_d[0] * lhs_b[1] + lhs_d[1] * lhs_b[0];
  if (det.is_zero()) {
    throw InsufficientPrecision("determinant vanishes modulo t^" +
                                std::to_string(det.precision()));
  }
  if (det.valuation() != m + 1) {
    throw ConsistencyError("determinant has valuation " +
                           std::to_string(det.valuation()) + ", expected " +
                           std::to_string(m + 1));
  }
  const LaurentSeries det_inv = inverse(det);
  LaurentSeries b = (lhs_d[0] * rhs[1] + lhs_d[1] * rhs[0]) * det_inv;
  LaurentSeries d = (rhs[0] * lhs_b[1] + rhs[1] * lhs_b[0]) * det_inv;
  return {std::move(b), std::move(d), c[0], c[1], det};
}

Poly eta_build(const Poly& p_t, const Poly& pi) {
  const auto& field = p_t.field();
  if (p_t.is_zero() || !is_one_unit(p_t[0]) ||
      !(p_t[0] - LaurentSeries::one(field, p_t[0].precision())).is_zero()) {
    throw PreconditionError("eta needs p_t(0) = 1");
  }
  std::vector<LaurentSeries> shifted(p_t.coeffs().begin() + 1,
                                     p_t.coeffs().end());
  return poly_divmod(Poly(field, std::move(shifted)), pi).remainder;
}

// --- QuotientCtx ------------------------------------------------------------

QuotientCtx QuotientCtx::build(const Params& params) {
  if (params.n < 3) throw ConfigError("n must be at least 3");
  if (!params.field) throw ConfigError("no coefficient field given");
  QuotientCtx ctx;
  ctx.n_ = params.n;
  ctx.m_ = params.m;
  ctx.dim_ = 1 << (params.n - 1);
  ctx.precision_ = params.precision;
  ctx.field_ = params.field;
  ctx.alpha1_ = params.alpha1;
  ctx.alpha2_ = params.alpha2;
  ctx.labels_ = quadratic_labels(params.n, *params.field);

  BDSolution sol = solve_bd(params.n, params.m, params.alpha1, params.alpha2,
                            params.field, params.precision);
  ctx.b_ = std::move(sol.b);
  ctx.d_ = std::move(sol.d);
  ctx.c1_ = std::move(sol.c1);
  ctx.c2_ = std::move(sol.c2);
  ctx.det_ = std::move(sol.determinant);

  auto [p, f] = build_p_and_f(params.n, ctx.b_, ctx.d_);
  ctx.p_ = std::move(p);
  ctx.f_ = std::move(f);
  ctx.pi_ = build_pi(params.n, ctx.c1_, ctx.c2_);
  ctx.eta_poly_ = eta_build(ctx.p_, ctx.pi_);

  ctx.eta_images_.reserve(ctx.dim_);
  ctx.eta_images_.push_back(ctx.one());
  const QElement eta_x = ctx.from_poly(ctx.eta_poly_);
  for (int i = 1; i < ctx.dim_; ++i) {
    ctx.eta_images_.push_back(i == 1 ? eta_x
                                     : ctx.mul(ctx.eta_images_.back(), eta_x));
  }
  return ctx;
}

QElement QuotientCtx::zero() const {
  return QElement(std::vector<LaurentSeries>(
      dim_, LaurentSeries::exact_zero(field_)));
}

QElement QuotientCtx::one() const { return x_power(0); }

QElement QuotientCtx::scalar(const LaurentSeries& c) const {
  QElement u = zero();
  u[0] = c;
  return u;
}

QElement QuotientCtx::x_power(int i) const {
  if (i < dim_) {
    QElement u = zero();
    u[i] = LaurentSeries::one(field_, precision_);
    return u;
  }
  std::vector<LaurentSeries> coeffs(i + 1, LaurentSeries::exact_zero(field_));
  coeffs[i] = LaurentSeries::one(field_, precision_);
  return reduce(std::move(coeffs));
}

QElement QuotientCtx::from_poly(const Poly& p) const {
  return reduce(p.coeffs());
}

Poly QuotientCtx::to_poly(const QElement& u) const {
  return Poly(field_, u.coeffs());
}

QElement QuotientCtx::reduce(std::vector<LaurentSeries> r) const {
  // pi is monic of degree dim: x^dim = sum_{j<dim} pi_j x^j in char 2.
  for (int i = static_cast<int>(r.size()) - 1; i >= dim_; --i) {
    const LaurentSeries c = r[i];
    if (is_exact_zero(c)) continue;
    for (int j = 0; j < dim_; ++j) {
      if (is_exact_zero(pi_[j])) continue;
      LaurentSeries term = c * pi_[j];
      LaurentSeries& slot = r[i - dim_ + j];
      slot = is_exact_zero(slot) ? std::move(term) : slot + term;
    }
  }
  r.resize(dim_, LaurentSeries::exact_zero(field_));
  return QElement(std::move(r));
}

QElement QuotientCtx::mul(const QElement& u, const QElement& v) const {
  std::vector<LaurentSeries> prod(2 * dim_ - 1,
                                  LaurentSeries::exact_zero(field_));
  for (int i = 0; i < dim_; ++i) {
    if (is_exact_zero(u[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (is_exact_zero(v[j])) continue;
      LaurentSeries term = u[i] * v[j];
      LaurentSeries& slot = prod[i + j];
      slot = is_exact_zero(slot) ? std::move(term) : slot + term;
    }
  }
  return reduce(std::move(prod));
}

QElement QuotientCtx::eta(const QElement& u) const {
  QElement out = zero();
  for (int i = 0; i < dim_; ++i) {
    if (is_exact_zero(u[i])) continue;
    out = out + u[i] * eta_images_[i];
  }
  return out;
}

QuotientCtx QuotientCtx::truncated(int prec) const {
  QuotientCtx t = *this;
  t.precision_ = std::min(prec, precision_);
  t.b_ = b_.truncated(prec);
  t.d_ = d_.truncated(prec);
  t.c1_ = c1_.truncated(prec);
  t.c2_ = c2_.truncated(prec);
  t.pi_ = pi_.truncated(prec);
  t.p_ = p_.truncated(prec);
  t.f_ = f_.truncated(prec);
  t.eta_poly_ = eta_poly_.truncated(prec);
  for (auto& e : t.eta_images_) e = e.truncated(prec);
  return t;
}

QElement q_mul(const QElement& u, const QElement& v, const QuotientCtx& ctx) {
  return ctx.mul(u, v);
}

QElement eta_apply(const QElement& u, const QuotientCtx& ctx) {
  return ctx.eta(u);
}

// --- Idempotents --------------------------------------------------------------

const QElement& IdempotentSet::for_label(GFElement a) const {
  for (const auto& la : e_a) {
    if (la.a == a) return la.e;
  }
  throw PreconditionError("no idempotent for label " + to_string(a));
}

std::vector<QElement> IdempotentSet::all() const {
  std::vector<QElement> out{e_c1, e_c2};
  for (const auto& la : e_a) out.push_back(la.e);
  return out;
}

IdempotentSet crt_idempotents(const QuotientCtx& ctx) {
  const auto& field = ctx.field();
  const int prec = ctx.precision();
  const auto one = LaurentSeries::one(field, prec);

  std::vector<Poly> factors;
  factors.emplace_back(field, std::vector<LaurentSeries>{ctx.c1(), one});
  factors.emplace_back(field, std::vector<LaurentSeries>{ctx.c2(), one});
  for (GFElement a : ctx.labels()) {
    factors.push_back(quadratic_factor(a, field, prec));
  }

  std::vector<QElement> idems;
  idems.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Poly cofactor = Poly::constant(one);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j != i) cofactor = cofactor * factors[j];
    }
    const Poly s = poly_inverse_mod(cofactor, factors[i],
                                    default_zero_floor(factors[i]));
    idems.push_back(ctx.from_poly(cofactor * s));
  }

  IdempotentSet out;
  out.e_c1 = std::move(idems[0]);
  out.e_c2 = std::move(idems[1]);
  for (std::size_t k = 0; k < ctx.labels().size(); ++k) {
    out.e_a.push_back({ctx.labels()[k], std::move(idems[k + 2])});
  }
  return out;
}

// --- d_a ----------------------------------------------------------------------

LaurentSeries da_by_remainder(int n, GFElement a, const FieldPtr& field,
                              int prec) {
  const int half_dim = 1 << (n - 2);
  std::vector<LaurentSeries> coeffs(half_dim + 1,
                                    LaurentSeries::exact_zero(field));
  coeffs[half_dim] = LaurentSeries::one(field, prec);
  coeffs[1] = coeffs[1] + LaurentSeries::monomial(field, field->one(),
                                                  half_dim - 1, prec);
  const Poly lhs(field, std::move(coeffs));
  const Poly r = poly_divmod(lhs, quadratic_factor(a, field, prec)).remainder;
  if (r.degree() > 0) {
    throw ConsistencyError("remainder of x^(2^(n-2)) + t^(2^(n-2)-1) x depends on x");
  }
  return r.is_zero() ? LaurentSeries::zero(field, prec) : r[0];
}

LaurentSeries da_by_recursion(int n, GFElement a, const FieldPtr& field,
                              int prec) {
  const int half_dim = 1 << (n - 2);
  const auto at = LaurentSeries::monomial(field, a, 1, prec);
  const auto one = LaurentSeries::one(field, prec);
  // x^(2^j) = x_coeff * x + constant modulo x^2 + a t x + 1.
  LaurentSeries x_coeff = one;
  LaurentSeries constant = LaurentSeries::zero(field, prec);
  LaurentSeries at_power = at;  // (a t)^(2^j)
  for (int j = 0; j < n - 2; ++j) {
    x_coeff = at_power * x_coeff;
    constant = at_power * constant + one;
    at_power = at_power * at_power;
  }
  // x_coeff = (a t)^(2^(n-2)-1) = t^(2^(n-2)-1) because a^(2^(n-2)-1) = 1.
  if (gf_pow(a, half_dim - 1, *field) != field->one()) {
    throw ConsistencyError("a^(2^(n-2)-1) != 1: a is not in F_{2^(n-2)}");
  }
  const auto t_power = LaurentSeries::monomial(field, field->one(),
                                               half_dim - 1, prec);
  if (!(x_coeff - t_power).is_zero()) {
    throw ConsistencyError("x-terms of the d_a recursion do not cancel");
  }
  return constant;
}

QElement quaternion_free_term(const QuotientCtx& ctx) {
  const int half_dim = 1 << (ctx.n() - 2);
  const auto t_power = LaurentSeries::monomial(ctx.field(), ctx.field()->one(),
                                               half_dim - 1, ctx.precision());
  return ctx.x_power(half_dim) + t_power * ctx.x_power(1);
}

LaurentSeries compute_da(GFElement a, const QuotientCtx& ctx,
                         const IdempotentSet& idems, int check_prec) {
  const auto by_remainder =
      da_by_remainder(ctx.n(), a, ctx.field(), ctx.precision());
  const auto by_recursion =
      da_by_recursion(ctx.n(), a, ctx.field(), ctx.precision());
  if (residual_valuation(by_remainder, by_recursion) < check_prec) {
    throw ConsistencyError("the two computations of d_a disagree for a = " +
                           to_string(a));
  }
  if (by_remainder.is_zero()) {
    throw CertificationError("d_a nonzero", "d_a vanishes for a = " + to_string(a));
  }
  const QElement& e = idems.for_label(a);
  const QElement lhs = ctx.mul(quaternion_free_term(ctx), e);
  const QElement rhs = by_remainder * e;
  if ((lhs - rhs).valuation() < check_prec) {
    throw ConsistencyError("(xbar^(2^(n-2)) + t^(2^(n-2)-1) xbar) e_a != d_a e_a "
                           "for a = " + to_string(a));
  }
  return by_remainder;
}

}  // namespace sepdef
