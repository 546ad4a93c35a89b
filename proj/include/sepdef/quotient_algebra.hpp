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

// The deformed cyclic group algebra k((t))[x]/<pi_t(x)>.
//
//   pi_t(x) = (x + c1)(x + c2) prod_a (x^2 + a t x + 1)
//
// with c_i = 1 + alpha_i t^m the two 1-unit roots of f_t = p_t + x^2 + 1.
// The automorphism eta_t is induced by x -> (p_t(x) + 1)/x.

#ifndef SEPDEF_QUOTIENT_ALGEBRA_HPP_
#define SEPDEF_QUOTIENT_ALGEBRA_HPP_

#include <vector>

#include "sepdef/finite_field.hpp"
#include "sepdef/laurent.hpp"
#include "sepdef/polyring.hpp"

namespace sepdef {

// Representative of degree < dim; coeffs()[i] multiplies xbar^i.
class QElement {
 public:
  QElement() = default;
  explicit QElement(std::vector<LaurentSeries> coeffs)
      : coeffs_(std::move(coeffs)) {}

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<LaurentSeries>& coeffs() const { return coeffs_; }
  const LaurentSeries& operator[](int i) const { return coeffs_[i]; }
  LaurentSeries& operator[](int i) { return coeffs_[i]; }

  // Smallest coefficient valuation; for a residual this is the t-adic order
  // to which it is known to vanish.
  int valuation() const;
  int precision() const;
  bool is_zero() const;
  QElement truncated(int prec) const;

  friend QElement operator+(const QElement& u, const QElement& v);
  friend QElement operator-(const QElement& u, const QElement& v) {
    return u + v;
  }
  friend QElement operator*(const LaurentSeries& c, const QElement& u);

 private:
  std::vector<LaurentSeries> coeffs_;
};

struct BDSolution {
  LaurentSeries b;
  LaurentSeries d;
  LaurentSeries c1;
  LaurentSeries c2;
  LaurentSeries determinant;
};

// Solves, for i = 1, 2 and c_i = 1 + alpha_i t^m,
//
//   d (1 + alpha_i^2 t^(2m)) + b t (1 + alpha_i t^m)
//       = alpha_i^2 t^(2m) / mu(c_i) + 1
//
// by Cramer's rule.  The determinant is
// (alpha1 + alpha2) t^(m+1) (1 + (alpha1 + alpha2) t^m + alpha1 alpha2 t^(2m)),
// so m + 1 terms of precision are lost in the division.
//
// Throws PreconditionError if m < 2^(n-2) or an alpha is zero,
// SingularSystem if alpha1 == alpha2, and InsufficientPrecision if the
// determinant vanishes at the working precision.
BDSolution solve_bd(int n, int m, GFElement alpha1, GFElement alpha2,
                    const FieldPtr& field, int prec);

// (p_t(x) + 1) / x reduced modulo pi_t.  Throws PreconditionError unless
// p_t(0) = 1.
Poly eta_build(const Poly& p_t, const Poly& pi);

class QuotientCtx {
 public:
  struct Params {
    int n = 3;
    int m = 2;
    GFElement alpha1;
    GFElement alpha2;
    FieldPtr field;
    int precision = 0;  // absolute t-precision of all constants
  };

  // Runs solve_bd, builds p_t, f_t, pi_t and eta, and tabulates eta on the
  // monomial basis.
  static QuotientCtx build(const Params& params);

  int n() const { return n_; }
  int m() const { return m_; }
  int dim() const { return dim_; }
  int precision() const { return precision_; }
  const FieldPtr& field() const { return field_; }
  GFElement alpha1() const { return alpha1_; }
  GFElement alpha2() const { return alpha2_; }
  const std::vector<GFElement>& labels() const { return labels_; }

  const LaurentSeries& b() const { return b_; }
  const LaurentSeries& d() const { return d_; }
  const LaurentSeries& c1() const { return c1_; }
  const LaurentSeries& c2() const { return c2_; }
  const LaurentSeries& determinant() const { return det_; }
  const Poly& pi() const { return pi_; }
  const Poly& p() const { return p_; }
  const Poly& f() const { return f_; }
  const Poly& eta_poly() const { return eta_poly_; }
  // eta(xbar^i), i < dim.
  const std::vector<QElement>& eta_images() const { return eta_images_; }

  QElement zero() const;
  QElement one() const;
  QElement scalar(const LaurentSeries& c) const;
  QElement x_power(int i) const;
  // Reduction of an arbitrary polynomial modulo pi_t.
  QElement from_poly(const Poly& p) const;
  Poly to_poly(const QElement& u) const;

  QElement mul(const QElement& u, const QElement& v) const;
  QElement eta(const QElement& u) const;

  // The same algebra with every stored series truncated to `prec`.  Products
  // of integral elements computed in the truncation agree with the full ones
  // modulo t^prec.
  QuotientCtx truncated(int prec) const;

 private:
  QuotientCtx() = default;
  QElement reduce(std::vector<LaurentSeries> coeffs) const;

  int n_ = 0, m_ = 0, dim_ = 0, precision_ = 0;
  FieldPtr field_;
  GFElement alpha1_, alpha2_;
  std::vector<GFElement> labels_;
  LaurentSeries b_, d_, c1_, c2_, det_;
  Poly pi_, p_, f_, eta_poly_;
  std::vector<QElement> eta_images_;
};

QElement q_mul(const QElement& u, const QElement& v, const QuotientCtx& ctx);
QElement eta_apply(const QElement& u, const QuotientCtx& ctx);

struct LabeledIdempotent {
  GFElement a;
  QElement e;
};

struct IdempotentSet {
  QElement e_c1;
  QElement e_c2;
  std::vector<LabeledIdempotent> e_a;  // in the order of ctx.labels()

  const QElement& for_label(GFElement a) const;
  // e_c1, e_c2, then every e_a.
  std::vector<QElement> all() const;
};

// For each irreducible factor f_i of pi_t the idempotent (pi/f_i) s_i, where
// s_i inverts pi/f_i modulo f_i (extended Euclid).  Throws
// InsufficientPrecision if a cofactor cannot be inverted.
IdempotentSet crt_idempotents(const QuotientCtx& ctx);

// d_a by reducing x^(2^(n-2)) + t^(2^(n-2)-1) x modulo x^2 + a t x + 1.
// Throws ConsistencyError if the remainder depends on x.
LaurentSeries da_by_remainder(int n, GFElement a, const FieldPtr& field,
                              int prec);

// d_a by iterating x^(2^(j+1)) = (a t x)^(2^j) + 1 modulo x^2 + a t x + 1,
// starting from x and tracking the pair (x-coefficient, constant), then using
// a^(2^(n-2)-1) = 1 to cancel the x-term.  Throws ConsistencyError if the
// x-terms do not cancel.
LaurentSeries da_by_recursion(int n, GFElement a, const FieldPtr& field,
                              int prec);

// Both routes above, required to agree modulo t^check_prec, and the quotient
// identity (xbar^(2^(n-2)) + t^(2^(n-2)-1) xbar) e_a = d_a e_a checked to the
// same precision.  Throws ConsistencyError on any disagreement and
// CertificationError if d_a = 0.
LaurentSeries compute_da(GFElement a, const QuotientCtx& ctx,
                         const IdempotentSet& idems, int check_prec);

// The free term xbar^(2^(n-2)) + t^(2^(n-2)-1) xbar of the quaternion relation.
QElement quaternion_free_term(const QuotientCtx& ctx);

}  // namespace sepdef

#endif  // SEPDEF_QUOTIENT_ALGEBRA_HPP_
