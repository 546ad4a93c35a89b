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

// The skew polynomial ring A[y; eta] over A = k((t))[x]/(pi_t), and its
// quotient by the central element
//
//   g_t(y) = y^2 + z (e_c1 + e_c2) y + F,
//
// where F = xbar^(2^(n-2)) + t^(2^(n-2)-1) xbar for the quaternion family and
// F = 1 for the dihedral one.  Elements of the quotient are u0 + u1 y.

#ifndef SEPDEF_SKEW_QUOTIENT_HPP_
#define SEPDEF_SKEW_QUOTIENT_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "sepdef/algebra_types.hpp"
#include "sepdef/check.hpp"
#include "sepdef/quotient_algebra.hpp"

namespace sepdef {

struct SkewElement {
  QElement u0;
  QElement u1;
};

// Sum of coeffs[i] y^i, not reduced by g_t.
struct SkewPoly {
  std::vector<QElement> coeffs;
};

// y^i a = eta^i(a) y^i.
SkewPoly skew_poly_mul(const SkewPoly& u, const SkewPoly& v,
                       const QuotientCtx& ctx);
SkewPoly skew_poly_sub(const SkewPoly& u, const SkewPoly& v,
                       const QuotientCtx& ctx);
// Smallest coefficient valuation; the order to which `u` is known to vanish
// when it is a residual.
int skew_poly_valuation(const SkewPoly& u);

// z = t^V with V = 1 + max(0, -valuation(e_c1 + e_c2)), so that
// z (e_c1 + e_c2) vanishes at t = 0.
int choose_z_valuation(const IdempotentSet& idems);
LaurentSeries choose_z(const IdempotentSet& idems, const FieldPtr& field,
                       int prec);

class DeformCtx {
 public:
  static DeformCtx build(QuotientCtx q, IdempotentSet idems, GroupKind kind);
  // Computes the idempotents itself.
  static DeformCtx build(QuotientCtx q, GroupKind kind);

  const QuotientCtx& q() const { return q_; }
  const IdempotentSet& idems() const { return idems_; }
  GroupKind kind() const { return kind_; }
  const LaurentSeries& z() const { return z_; }
  int z_valuation() const { return z_valuation_; }
  // z (e_c1 + e_c2)
  const QElement& ze() const { return ze_; }
  const QElement& free_term() const { return free_term_; }

  SkewElement zero() const;
  SkewElement one() const;
  SkewElement y() const;
  SkewElement embed(const QElement& u) const;
  // xbar^i y^j, indexed i + j 2^(n-1) in the structure-constant tables.
  SkewElement basis(int index) const;
  int dim() const { return 2 * q_.dim(); }

  // Every stored series cut to absolute precision `prec`.  Idempotents are
  // dropped (they are not integral).
  DeformCtx truncated(int prec) const;

 private:
  DeformCtx(QuotientCtx q, IdempotentSet idems, GroupKind kind)
      : q_(std::move(q)), idems_(std::move(idems)), kind_(kind) {}

  QuotientCtx q_;
  IdempotentSet idems_;
  GroupKind kind_;
  LaurentSeries z_;
  int z_valuation_ = 0;
  QElement ze_;
  QElement free_term_;
};

// (u0 + u1 y)(v0 + v1 y) with y w = eta(w) y and y^2 = ze y + F.
SkewElement sq_mul(const SkewElement& u, const SkewElement& v,
                   const DeformCtx& dc);
SkewElement operator+(const SkewElement& u, const SkewElement& v);
int valuation(const SkewElement& u);

// Coefficients (F, ze, 1) of g_t in increasing powers of y.
SkewPoly build_gt(const DeformCtx& dc);

// Random element with coefficients that are polynomials in t of degree
// < terms over k.
SkewElement random_skew_element(const DeformCtx& dc, std::mt19937_64& rng,
                                int terms);

// Term-by-term centrality of g_t: eta^2 = id, eta(F) = F with its idempotent
// projections, eta(ze) = ze, ze e_a = 0, and the commutators of g_t with xbar
// and y.  Returns one record per identity; throws CertificationError naming
// the first that fails.
std::vector<CheckRecord> centrality_check(const DeformCtx& dc,
                                          int check_prec);

// Associativity of sq_mul on `triples` random triples.
CheckRecord associativity_check(const DeformCtx& dc, std::uint64_t seed,
                                int triples, int check_prec);
// e (u v) = (e u)(e v) for every idempotent e on random pairs.
CheckRecord graded_decomposition_check(const DeformCtx& dc,
                                       std::uint64_t seed, int pairs,
                                       int check_prec);
// eta(u v) = eta(u) eta(v) on random pairs.
CheckRecord eta_multiplicative_check(const DeformCtx& dc, std::uint64_t seed,
                                     int pairs, int check_prec);

// Structure constants at t = 0 on the basis DeformCtx::basis.  Throws CertificationError if a series
// entering the multiplication has negative valuation.
StructureConstants specialize_t0(const DeformCtx& dc);

struct QuadraticComponent {
  GFElement a;
  LaurentSeries d_a;  // the cocycle value on the nontrivial element
  bool field_irreducible = false;
  bool eta_nontrivial = false;
  int verified_to = 0;
};

struct SplitComponent {
  LaurentSeries root;      // c_i
  LaurentSeries constant;  // free term of g_t on the component
  bool separable = false;
  int verified_to = 0;
};

struct ComponentCertificate {
  std::vector<QuadraticComponent> quadratic;
  std::vector<SplitComponent> split;
  // Dimensions of the simple modules over the algebraic closure, sorted.
  std::vector<int> dimension_vector;

  int component_count() const {
    return static_cast<int>(dimension_vector.size());
  }
  int squared_dimension_sum() const;
};

// Projects g_t onto each idempotent.  On e_a: g_t e_a = (y^2 + d_a) e_a with
// d_a != 0, K_a a separable quadratic field and eta nontrivial on it, giving
// a 4-dimensional crossed product.  On e_ci: a separable quadratic in y over
// k((t)), giving two 1-dimensional components.  Throws CertificationError
// ("decomposition") on any failure.
ComponentCertificate decompose_components(const DeformCtx& dc,
                                          int check_prec);

}  // namespace sepdef

#endif  // SEPDEF_SKEW_QUOTIENT_HPP_
