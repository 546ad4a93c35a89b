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

#include "sepdef/polyring.hpp"

#include <algorithm>
#include <climits>
#include <optional>

#include "sepdef/errors.hpp"

namespace sepdef {

namespace {

// Leading coefficient is 1 modulo its precision.
bool is_one(const LaurentSeries& c) {
  if (c.is_zero() || c.valuation() != 0) return false;
  const auto cs = c.coeffs();
  if (cs[0] != c.field()->one()) return false;
  return std::all_of(cs.begin() + 1, cs.end(),
                     [](GFElement e) { return e.is_zero(); });
}

void accumulate(std::optional<LaurentSeries>& slot, const LaurentSeries& v) {
  if (slot) {
    *slot += v;
  } else {
    slot = v;
  }
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<LaurentSeries> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::normalized_checked(FieldPtr field,
                              std::vector<LaurentSeries> coeffs, int floor) {
  while (!coeffs.empty() && coeffs.back().is_zero()) {
    if (coeffs.back().precision() < floor) {
      throw InsufficientPrecision(
          "polynomial coefficient only known to vanish modulo t^" +
          std::to_string(coeffs.back().precision()) + ", need t^" +
          std::to_string(floor));
    }
    coeffs.pop_back();
  }
  return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::constant(const LaurentSeries& c) {
  return Poly(c.field(), {c});
}

Poly Poly::monomial(const LaurentSeries& c, int degree) {
  std::vector<LaurentSeries> coeffs(
      degree + 1, LaurentSeries::zero(c.field(), c.precision()));
  coeffs[degree] = c;
  return Poly(c.field(), std::move(coeffs));
}

Poly Poly::from_constants(FieldPtr field,
                          const std::vector<GFElement>& constants, int prec) {
  std::vector<LaurentSeries> coeffs;
  coeffs.reserve(constants.size());
  for (GFElement c : constants) {
    coeffs.push_back(LaurentSeries::constant(field, c, prec));
  }
  return Poly(std::move(field), std::move(coeffs));
}

LaurentSeries Poly::coefficient(int i, int prec_hint) const {
  if (i >= 0 && i <= degree()) return coeffs_[i];
  return LaurentSeries::zero(field_, prec_hint);
}

bool Poly::is_monic() const { return !is_zero() && is_one(leading()); }

int Poly::min_precision() const {
  int p = INT_MAX;
  for (const auto& c : coeffs_) p = std::min(p, c.precision());
  return p;
}

int Poly::min_valuation() const {
  int v = INT_MAX;
  for (const auto& c : coeffs_) v = std::min(v, c.valuation());
  return v;
}

Poly Poly::truncated(int prec) const {
  std::vector<LaurentSeries> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.truncated(prec));
  return Poly(field_, std::move(out));
}

Poly Poly::derivative() const {
  std::vector<LaurentSeries> out;
  for (int i = 1; i <= degree(); ++i) {
    out.push_back(i % 2 == 1
                      ? coeffs_[i]
                      : LaurentSeries::zero(field_, coeffs_[i].precision()));
  }
  return Poly(field_, std::move(out));
}

LaurentSeries Poly::eval(const LaurentSeries& point) const {
  if (is_zero()) return LaurentSeries::zero(field_, point.precision());
  LaurentSeries acc = leading();
  for (int i = degree() - 1; i >= 0; --i) acc = acc * point + coeffs_[i];
  return acc;
}

std::vector<GFElement> Poly::specialize_t0() const {
  std::vector<GFElement> out;
  out.reserve(coeffs_.size());
  for (int i = 0; i <= degree(); ++i) {
    const auto& c = coeffs_[i];
    if (!c.is_zero() && c.valuation() < 0) {
      throw PreconditionError("coefficient of x^" + std::to_string(i) +
                              " has negative valuation " +
                              std::to_string(c.valuation()) +
                              "; t = 0 is undefined");
    }
    out.push_back(c.coefficient(0));
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& field = a.field_ ? a.field_ : b.field_;
  const int n = std::max(a.degree(), b.degree()) + 1;
  std::vector<LaurentSeries> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const bool in_a = i <= a.degree();
    const bool in_b = i <= b.degree();
    if (in_a && in_b) {
      out.push_back(a.coeffs_[i] + b.coeffs_[i]);
    } else {
      out.push_back(in_a ? a.coeffs_[i] : b.coeffs_[i]);
    }
  }
  return Poly(field, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  const auto& field = a.field_ ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return Poly(field);
  std::vector<std::optional<LaurentSeries>> acc(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) {
      accumulate(acc[i + j], a.coeffs_[i] * b.coeffs_[j]);
    }
  }
  std::vector<LaurentSeries> out;
  out.reserve(acc.size());
  for (auto& c : acc) out.push_back(std::move(*c));
  return Poly(field, std::move(out));
}

Poly operator*(const LaurentSeries& c, const Poly& p) {
  std::vector<LaurentSeries> out;
  out.reserve(p.coeffs_.size());
  for (const auto& x : p.coeffs_) out.push_back(c * x);
  return Poly(p.field_ ? p.field_ : c.field(), std::move(out));
}

namespace {

// Long division returning the raw (unnormalized) remainder coefficients.
std::pair<std::vector<LaurentSeries>, std::vector<LaurentSeries>> divide_raw(
    const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  const int dg = g.degree();
  std::vector<LaurentSeries> r = f.coeffs();
  if (f.degree() < dg) return {{}, std::move(r)};

  const bool monic = is_one(g.leading());
  const LaurentSeries lc_inv = monic ? g.leading() : inverse(g.leading());
  std::vector<LaurentSeries> q(f.degree() - dg + 1);
  for (int i = f.degree(); i >= dg; --i) {
    const LaurentSeries coef = monic ? r[i] : r[i] * lc_inv;
    q[i - dg] = coef;
    for (int j = 0; j < dg; ++j) r[i - dg + j] += coef * g[j];
    r[i] = LaurentSeries::zero(f.field(), r[i].precision());
  }
  r.resize(dg);
  return {std::move(q), std::move(r)};
}

}  // namespace

DivMod poly_divmod(const Poly& f, const Poly& g) {
  auto [q, r] = divide_raw(f, g);
  return {Poly(f.field(), std::move(q)), Poly(f.field(), std::move(r))};
}

int default_zero_floor(const Poly& f) {
  const int p = f.min_precision();
  return p == INT_MAX ? 0 : p / 2;
}

namespace {

Poly make_monic(const Poly& p) {
  if (p.is_monic()) return p;
  return inverse(p.leading()) * p;
}

}  // namespace

Poly poly_gcd(const Poly& f, const Poly& g, int zero_floor) {
  if (f.is_zero()) return g.is_zero() ? g : make_monic(g);
  Poly a = make_monic(f);
  Poly b = g;
  while (!b.is_zero()) {
    b = make_monic(b);
    auto [q, r] = divide_raw(a, b);
    a = std::move(b);
    b = Poly::normalized_checked(f.field(), std::move(r), zero_floor);
  }
  return a;
}

Poly poly_inverse_mod(const Poly& h, const Poly& f, int zero_floor) {
  // Invariant: s_i h = r_i (mod f).
  Poly r0 = f;
  Poly r1 = Poly::normalized_checked(f.field(), poly_divmod(h, f).remainder.coeffs(),
                                     zero_floor);
  Poly s0(f.field());
  Poly s1 = Poly::constant(LaurentSeries::one(f.field(), f.min_precision()));
  while (r1.degree() > 0) {
    auto [q, r] = divide_raw(r0, r1);
    Poly qp(f.field(), std::move(q));
    Poly rn = Poly::normalized_checked(f.field(), std::move(r), zero_floor);
    Poly sn = s0 - qp * s1;
    r0 = std::move(r1);
    r1 = std::move(rn);
    s0 = std::move(s1);
    s1 = std::move(sn);
  }
  if (r1.is_zero()) {
    throw InsufficientPrecision("polynomials are not coprime at precision " +
                                std::to_string(zero_floor));
  }
  return poly_divmod(inverse(r1[0]) * s1, f).remainder;
}

bool poly_separable(const Poly& f, int zero_floor) {
  if (f.is_zero()) throw PreconditionError("separability of the zero polynomial");
  std::vector<LaurentSeries> df;
  for (int i = 1; i <= f.degree(); ++i) {
    df.push_back(i % 2 == 1 ? f[i]
                            : LaurentSeries::zero(f.field(), f[i].precision()));
  }
  const Poly derivative =
      Poly::normalized_checked(f.field(), std::move(df), zero_floor);
  return poly_gcd(f, derivative, zero_floor).degree() == 0;
}

bool poly_separable(const Poly& f) {
  return poly_separable(f, default_zero_floor(f));
}

std::vector<GFElement> quadratic_labels(int n, const GFContext& field) {
  if (n < 3) throw ConfigError("n must be at least 3");
  if (field.degree() % (n - 2) != 0) {
    throw ConfigError("GF(2^" + std::to_string(field.degree()) +
                      ") does not contain F_{2^" + std::to_string(n - 2) + "}");
  }
  return gf_subfield_units(field, n - 2);
}

Poly quadratic_factor(GFElement a, const FieldPtr& field, int prec) {
  return Poly(field, {LaurentSeries::one(field, prec),
                      LaurentSeries::monomial(field, a, 1, prec),
                      LaurentSeries::one(field, prec)});
}

bool quadratic_has_root_mod_t2(GFElement a, const FieldPtr& field) {
  const Poly q = quadratic_factor(a, field, 2);
  for (std::uint32_t u0 = 0; u0 < field->size(); ++u0) {
    for (std::uint32_t u1 = 0; u1 < field->size(); ++u1) {
      const auto u = LaurentSeries::polynomial(
          field, {GFElement(u0), GFElement(u1)}, 2);
      if (q.eval(u).is_zero()) return true;
    }
  }
  return false;
}

Poly build_mu(int n, const FieldPtr& field, int prec) {
  Poly mu = Poly::constant(LaurentSeries::one(field, prec));
  for (GFElement a : quadratic_labels(n, *field)) {
    mu = mu * quadratic_factor(a, field, prec);
  }
  return mu;
}

Poly build_pi(int n, const LaurentSeries& c1, const LaurentSeries& c2) {
  if (!is_one_unit(c1) || !is_one_unit(c2)) {
    throw PreconditionError("the roots c1, c2 of pi_t must be 1-units");
  }
  if ((c1 - c2).is_zero()) {
    throw DegenerateInput("c1 and c2 coincide modulo t^" +
                          std::to_string((c1 - c2).precision()));
  }
  const auto& field = c1.field();
  const int prec = std::min(c1.precision(), c2.precision());
  const auto one = LaurentSeries::one(field, prec);
  const Poly lin1(field, {c1, one});
  const Poly lin2(field, {c2, one});
  return lin1 * lin2 * build_mu(n, field, prec);
}

PAndF build_p_and_f(int n, const LaurentSeries& b, const LaurentSeries& d) {
  if (!is_one_unit(d)) throw PreconditionError("d must be a 1-unit");
  if (!b.is_zero() && b.valuation() < 0) {
    throw PreconditionError("b must lie in k[[t]]");
  }
  const auto& field = d.field();
  const int prec = std::min(b.precision() + 1, d.precision());
  const auto one = LaurentSeries::one(field, prec);
  const Poly head(field, {one, b.shifted(1), d});
  Poly p = head * build_mu(n, field, prec);
  Poly f = p + Poly(field, {one, LaurentSeries::zero(field, prec), one});
  return {std::move(p), std::move(f)};
}

std::string to_string(const Poly& p, int max_terms) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    if (p[i].is_zero()) continue;
    if (!out.empty()) out += "\n  + ";
    out += "(" + to_string(p[i], max_terms) + ")";
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out;
}

}  // namespace sepdef
