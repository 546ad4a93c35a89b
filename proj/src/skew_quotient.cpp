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

#include "sepdef/skew_quotient.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "sepdef/errors.hpp"

namespace sepdef {

namespace {

QElement eta_power(const QElement& u, int i, const QuotientCtx& ctx) {
  QElement out = u;
  for (int k = 0; k < i; ++k) out = ctx.eta(out);
  return out;
}

LaurentSeries t_power(const FieldPtr& field, int e, int prec) {
  return LaurentSeries::monomial(field, field->one(), e, prec);
}

// Free term of g_t on the component of e_ci: F evaluated at xbar = c_i.
LaurentSeries split_constant(const DeformCtx& dc, const LaurentSeries& c) {
  const auto& q = dc.q();
  if (dc.kind() == GroupKind::kDihedral) {
    return LaurentSeries::one(q.field(), q.precision());
  }
  const int half = 1 << (q.n() - 2);
  return pow(c, half) + t_power(q.field(), half - 1, q.precision()) * c;
}

// Free term of g_t on the component of e_a.
LaurentSeries quadratic_constant(const DeformCtx& dc, GFElement a) {
  const auto& q = dc.q();
  if (dc.kind() == GroupKind::kDihedral) {
    return LaurentSeries::one(q.field(), q.precision());
  }
  return da_by_remainder(q.n(), a, q.field(), q.precision());
}

void require(const CheckRecord& rec) {
  if (!rec.pass) {
    throw CertificationError(
        rec.name, rec.name + ": " + rec.formula + " fails (residual order " +
                      (rec.verified_to ? std::to_string(*rec.verified_to)
                                       : std::string("exact")) +
                      ")");
  }
}

QElement random_q_element(const QuotientCtx& ctx, std::mt19937_64& rng,
                          int terms) {
  QElement u = ctx.zero();
  std::uniform_int_distribution<uint32_t> coeff(0, ctx.field()->size() - 1);
  for (int i = 0; i < ctx.dim(); ++i) {
    std::vector<GFElement> cs(terms);
    for (auto& c : cs) c = GFElement{coeff(rng)};
    u[i] = LaurentSeries::polynomial(ctx.field(), cs, ctx.precision());
  }
  return u;
}

}  // namespace

// --- SkewPoly -----------------------------------------------------------------

SkewPoly skew_poly_mul(const SkewPoly& u, const SkewPoly& v,
                       const QuotientCtx& ctx) {
  if (u.coeffs.empty() || v.coeffs.empty()) return {};
  SkewPoly out;
  out.coeffs.assign(u.coeffs.size() + v.coeffs.size() - 1, ctx.zero());
  for (std::size_t i = 0; i < u.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < v.coeffs.size(); ++j) {
      const QElement twisted = eta_power(v.coeffs[j], static_cast<int>(i), ctx);
      out.coeffs[i + j] = out.coeffs[i + j] + ctx.mul(u.coeffs[i], twisted);
    }
  }
  return out;
}

SkewPoly skew_poly_sub(const SkewPoly& u, const SkewPoly& v,
                       const QuotientCtx& ctx) {
  SkewPoly out;
  const std::size_t len = std::max(u.coeffs.size(), v.coeffs.size());
  for (std::size_t i = 0; i < len; ++i) {
    QElement c = ctx.zero();
    if (i < u.coeffs.size()) c = c + u.coeffs[i];
    if (i < v.coeffs.size()) c = c + v.coeffs[i];
    out.coeffs.push_back(std::move(c));
  }
  return out;
}

int skew_poly_valuation(const SkewPoly& u) {
  int v = INT_MAX;
  for (const auto& c : u.coeffs) v = std::min(v, c.valuation());
  return v;
}

// --- z and DeformCtx ------------------------------------------------------------

int choose_z_valuation(const IdempotentSet& idems) {
  const int v = (idems.e_c1 + idems.e_c2).valuation();
  return 1 + std::max(0, -v);
}

LaurentSeries choose_z(const IdempotentSet& idems, const FieldPtr& field,
                       int prec) {
  return t_power(field, choose_z_valuation(idems), prec);
}

DeformCtx DeformCtx::build(QuotientCtx q, IdempotentSet idems,
                           GroupKind kind) {
  DeformCtx dc(std::move(q), std::move(idems), kind);
  const auto& ctx = dc.q_;
  dc.z_valuation_ = choose_z_valuation(dc.idems_);
  dc.z_ = choose_z(dc.idems_, ctx.field(), ctx.precision());
  dc.ze_ = dc.z_ * (dc.idems_.e_c1 + dc.idems_.e_c2);
  dc.free_term_ = kind == GroupKind::kQuaternion ? quaternion_free_term(ctx)
                                                 : ctx.one();
  return dc;
}

DeformCtx DeformCtx::build(QuotientCtx q, GroupKind kind) {
  IdempotentSet idems = crt_idempotents(q);
  return build(std::move(q), std::move(idems), kind);
}

SkewElement DeformCtx::zero() const { return {q_.zero(), q_.zero()}; }
SkewElement DeformCtx::one() const { return {q_.one(), q_.zero()}; }
SkewElement DeformCtx::y() const { return {q_.zero(), q_.one()}; }
SkewElement DeformCtx::embed(const QElement& u) const { return {u, q_.zero()}; }

SkewElement DeformCtx::basis(int index) const {
  const int i = index % q_.dim();
  const int j = index / q_.dim();
  return j == 0 ? SkewElement{q_.x_power(i), q_.zero()}
                : SkewElement{q_.zero(), q_.x_power(i)};
}

DeformCtx DeformCtx::truncated(int prec) const {
  DeformCtx dc(q_.truncated(prec), IdempotentSet{}, kind_);
  dc.z_ = z_.truncated(prec);
  dc.z_valuation_ = z_valuation_;
  dc.ze_ = ze_.truncated(prec);
  dc.free_term_ = free_term_.truncated(prec);
  return dc;
}

// --- Multiplication -------------------------------------------------------------

SkewElement sq_mul(const SkewElement& u, const SkewElement& v,
                   const DeformCtx& dc) {
  const auto& q = dc.q();
  const QElement u1_eta_v1 = q.mul(u.u1, q.eta(v.u1));
  return {q.mul(u.u0, v.u0) + q.mul(u1_eta_v1, dc.free_term()),
          q.mul(u.u0, v.u1) + q.mul(u.u1, q.eta(v.u0)) +
              q.mul(u1_eta_v1, dc.ze())};
}

SkewElement operator+(const SkewElement& u, const SkewElement& v) {
  return {u.u0 + v.u0, u.u1 + v.u1};
}

int valuation(const SkewElement& u) {
  return std::min(u.u0.valuation(), u.u1.valuation());
}

SkewPoly build_gt(const DeformCtx& dc) {
  return {{dc.free_term(), dc.ze(), dc.q().one()}};
}

SkewElement random_skew_element(const DeformCtx& dc, std::mt19937_64& rng,
                                int terms) {
  QElement u0 = random_q_element(dc.q(), rng, terms);
  QElement u1 = random_q_element(dc.q(), rng, terms);
  return {std::move(u0), std::move(u1)};
}

// --- Checks ---------------------------------------------------------------------

std::vector<CheckRecord> centrality_check(const DeformCtx& dc,
                                          int check_prec) {
  const auto& q = dc.q();
  const auto& idems = dc.idems();
  std::vector<CheckRecord> out;

  int v = INT_MAX;
  for (int i = 0; i < q.dim(); ++i) {
    const QElement u = q.x_power(i);
    v = std::min(v, (q.eta(q.eta(u)) - u).valuation());
  }
  out.push_back(residual_check("eta_involution",
                               "eta_t(eta_t(xbar^i)) = xbar^i for all i", v,
                               check_prec));

  const QElement& f = dc.free_term();
  out.push_back(residual_check("free_term_eta_invariant", "eta_t(F) = F",
                               (q.eta(f) - f).valuation(), check_prec));

  v = INT_MAX;
  for (const auto* e : {&idems.e_c1, &idems.e_c2}) {
    const auto& c = e == &idems.e_c1 ? q.c1() : q.c2();
    v = std::min(v, (q.mul(f, *e) - split_constant(dc, c) * *e).valuation());
  }
  for (const auto& la : idems.e_a) {
    v = std::min(v, (q.mul(f, la.e) - quadratic_constant(dc, la.a) * la.e)
                        .valuation());
  }
  out.push_back(residual_check(
      "free_term_projections",
      "F e_ci = F(c_i) e_ci and F e_a = d_a e_a", v, check_prec));

  out.push_back(residual_check("ze_eta_invariant",
                               "eta_t(z(e_c1+e_c2)) = z(e_c1+e_c2)",
                               (q.eta(dc.ze()) - dc.ze()).valuation(),
                               check_prec));
  v = INT_MAX;
  for (const auto& la : idems.e_a) {
    v = std::min(v, q.mul(dc.ze(), la.e).valuation());
  }
  out.push_back(residual_check("ze_annihilates_quadratic",
                               "z(e_c1+e_c2) e_a = 0 for all a", v,
                               check_prec));

  const SkewPoly g = build_gt(dc);
  const SkewPoly x{{q.x_power(1)}};
  const SkewPoly y{{q.zero(), q.one()}};
  out.push_back(residual_check(
      "commutator_x", "g_t(y) xbar = xbar g_t(y)",
      skew_poly_valuation(skew_poly_sub(skew_poly_mul(g, x, q),
                                        skew_poly_mul(x, g, q), q)),
      check_prec));
  out.push_back(residual_check(
      "commutator_y", "g_t(y) y = y g_t(y)",
      skew_poly_valuation(skew_poly_sub(skew_poly_mul(g, y, q),
                                        skew_poly_mul(y, g, q), q)),
      check_prec));

  for (const auto& rec : out) require(rec);
  return out;
}

CheckRecord associativity_check(const DeformCtx& dc, std::uint64_t seed,
                                int triples, int check_prec) {
  std::mt19937_64 rng(seed);
  int v = INT_MAX;
  for (int k = 0; k < triples; ++k) {
    const auto u = random_skew_element(dc, rng, 4);
    const auto w = random_skew_element(dc, rng, 4);
    const auto x = random_skew_element(dc, rng, 4);
    const auto lhs = sq_mul(sq_mul(u, w, dc), x, dc);
    const auto rhs = sq_mul(u, sq_mul(w, x, dc), dc);
    v = std::min(v, valuation(lhs + rhs));
  }
  return residual_check("associativity",
                        "(uv)w = u(vw) on " + std::to_string(triples) +
                            " random triples",
                        v, check_prec);
}

CheckRecord graded_decomposition_check(const DeformCtx& dc,
                                       std::uint64_t seed, int pairs,
                                       int check_prec) {
  std::mt19937_64 rng(seed);
  int v = INT_MAX;
  const auto idems = dc.idems().all();
  for (int k = 0; k < pairs; ++k) {
    const auto u = random_skew_element(dc, rng, 4);
    const auto w = random_skew_element(dc, rng, 4);
    const auto uw = sq_mul(u, w, dc);
    for (const auto& e : idems) {
      const auto es = dc.embed(e);
      const auto lhs = sq_mul(es, uw, dc);
      const auto rhs = sq_mul(sq_mul(es, u, dc), sq_mul(es, w, dc), dc);
      v = std::min(v, valuation(lhs + rhs));
    }
  }
  return residual_check("graded_decomposition",
                        "e(uv) = (eu)(ev) for every primitive idempotent e", v,
                        check_prec);
}

CheckRecord eta_multiplicative_check(const DeformCtx& dc, std::uint64_t seed,
                                     int pairs, int check_prec) {
  const auto& q = dc.q();
  std::mt19937_64 rng(seed);
  int v = INT_MAX;
  for (int k = 0; k < pairs; ++k) {
    const auto u = random_q_element(q, rng, 4);
    const auto w = random_q_element(q, rng, 4);
    v = std::min(v, (q.eta(q.mul(u, w)) - q.mul(q.eta(u), q.eta(w))).valuation());
  }
  return residual_check("eta_multiplicative",
                        "eta_t(uv) = eta_t(u) eta_t(v) on random pairs", v,
                        check_prec);
}

// --- Specialization -------------------------------------------------------------

StructureConstants specialize_t0(const DeformCtx& dc) {
  const auto& q = dc.q();
  auto require_integral = [](int valuation, const std::string& what) {
    if (valuation < 0) {
      throw CertificationError("specialization",
                               what + " has negative valuation " +
                                   std::to_string(valuation));
    }
  };
  require_integral(q.pi().min_valuation(), "pi_t");
  for (const auto& e : q.eta_images()) require_integral(e.valuation(), "eta_t");
  require_integral(dc.ze().valuation(), "z(e_c1+e_c2)");
  require_integral(dc.free_term().valuation(), "the free term of g_t");

  // Reduction modulo t is a ring map on integral elements, so one digit of
  // precision suffices.
  const DeformCtx t0 = dc.truncated(1);
  const int half = q.dim();
  StructureConstants sc;
  sc.dim = dc.dim();
  sc.table.reserve(sc.dim * sc.dim);
  std::vector<SkewElement> basis;
  for (int p = 0; p < sc.dim; ++p) basis.push_back(t0.basis(p));
  for (int p = 0; p < sc.dim; ++p) {
    for (int r = 0; r < sc.dim; ++r) {
      const SkewElement prod = sq_mul(basis[p], basis[r], t0);
      std::vector<GFElement> coords(sc.dim);
      for (int i = 0; i < half; ++i) {
        coords[i] = prod.u0[i].coefficient(0);
        coords[i + half] = prod.u1[i].coefficient(0);
      }
      sc.table.push_back(std::move(coords));
    }
  }
  return sc;
}

// --- Components -----------------------------------------------------------------

int ComponentCertificate::squared_dimension_sum() const {
  int sum = 0;
  for (int d : dimension_vector) sum += d * d;
  return sum;
}

ComponentCertificate decompose_components(const DeformCtx& dc,
                                          int check_prec) {
  const auto& q = dc.q();
  const auto& field = q.field();
  const auto& idems = dc.idems();
  const SkewPoly g = build_gt(dc);
  auto fail = [](const std::string& what) {
    throw CertificationError("decomposition", what);
  };
  ComponentCertificate cert;

  for (const auto& la : idems.e_a) {
    QuadraticComponent comp;
    comp.a = la.a;
    comp.d_a = dc.kind() == GroupKind::kQuaternion
                   ? compute_da(la.a, q, idems, check_prec)
                   : LaurentSeries::one(field, q.precision());
    if (comp.d_a.is_zero()) fail("d_a vanishes for a = " + to_string(la.a));
    // g_t e_a = (y^2 + d_a) e_a
    const SkewPoly projected = skew_poly_mul(SkewPoly{{la.e}}, g, q);
    const SkewPoly expected{{comp.d_a * la.e, q.zero(), la.e}};
    comp.verified_to = skew_poly_valuation(skew_poly_sub(projected, expected, q));
    if (comp.verified_to < check_prec) {
      fail("g_t e_a != (y^2 + d_a) e_a for a = " + to_string(la.a));
    }
    const Poly quad = quadratic_factor(la.a, field, q.precision());
    comp.field_irreducible =
        !quadratic_has_root_mod_t2(la.a, field) && poly_separable(quad);
    if (!comp.field_irreducible) {
      fail("x^2 + a t x + 1 is not an irreducible separable quadratic for a = " +
           to_string(la.a));
    }
    // eta moves xbar e_a by a t e_a, which is nonzero on K_a.
    const QElement xe = q.mul(q.x_power(1), la.e);
    const QElement moved = q.eta(xe) - xe;
    const QElement shift =
        LaurentSeries::monomial(field, la.a, 1, q.precision()) * la.e;
    comp.eta_nontrivial = (moved - shift).valuation() >= check_prec &&
                          !shift.is_zero() && shift.valuation() < check_prec;
    if (!comp.eta_nontrivial) {
      fail("eta_t is trivial on K_a for a = " + to_string(la.a));
    }
    cert.quadratic.push_back(std::move(comp));
    cert.dimension_vector.push_back(2);
  }

  const auto one = LaurentSeries::one(field, q.precision());
  for (const auto* e : {&idems.e_c1, &idems.e_c2}) {
    SplitComponent comp;
    comp.root = e == &idems.e_c1 ? q.c1() : q.c2();
    comp.constant = split_constant(dc, comp.root);
    // g_t e_ci = (y^2 + z y + F(c_i)) e_ci
    const SkewPoly projected = skew_poly_mul(SkewPoly{{*e}}, g, q);
    const SkewPoly expected{{comp.constant * *e, dc.z() * *e, *e}};
    comp.verified_to = skew_poly_valuation(skew_poly_sub(projected, expected, q));
    if (comp.verified_to < check_prec) {
      fail("g_t e_ci does not match its split quadratic");
    }
    comp.separable = poly_separable(Poly(field, {comp.constant, dc.z(), one}));
    if (!comp.separable) fail("split quadratic y^2 + z y + F(c_i) is inseparable");
    cert.split.push_back(std::move(comp));
    cert.dimension_vector.push_back(1);
    cert.dimension_vector.push_back(1);
  }
  std::sort(cert.dimension_vector.begin(), cert.dimension_vector.end());
  return cert;
}

}  // namespace sepdef
