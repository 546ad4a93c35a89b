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

// Univariate polynomials over truncated Laurent series, and the explicit
// polynomials of the deformation: the quadratic factors x^2 + a t x + 1,
// their product mu, the modulus pi_t and the pair p_t, f_t.

#ifndef SEPDEF_POLYRING_HPP_
#define SEPDEF_POLYRING_HPP_

#include <string>
#include <utility>
#include <vector>

#include "sepdef/finite_field.hpp"
#include "sepdef/laurent.hpp"

namespace sepdef {

// coeffs()[i] is the coefficient of x^i.  Leading coefficients that are zero
// at their precision are stripped, so degree() is the index of the last
// coefficient known to be nonzero.  Coefficients past the degree are exact
// zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<LaurentSeries> coeffs);

  // Like the constructor, but throws InsufficientPrecision if a stripped
  // leading coefficient is only known to be zero modulo t^p with p < floor.
  static Poly normalized_checked(FieldPtr field,
                                 std::vector<LaurentSeries> coeffs, int floor);

  static Poly constant(const LaurentSeries& c);
  // c * x^degree.
  static Poly monomial(const LaurentSeries& c, int degree);
  // Coefficients taken from `constants` (index = power of x), each an exact
  // element of k stored at precision `prec`.
  static Poly from_constants(FieldPtr field,
                             const std::vector<GFElement>& constants,
                             int prec);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<LaurentSeries>& coeffs() const { return coeffs_; }
  const LaurentSeries& operator[](int i) const { return coeffs_[i]; }
  const LaurentSeries& leading() const { return coeffs_.back(); }
  // Coefficient of x^i; exact zero (at `prec_hint`) past the degree.
  LaurentSeries coefficient(int i, int prec_hint) const;

  // Leading coefficient equal to 1 at its precision.
  bool is_monic() const;
  // Smallest coefficient precision (INT_MAX for the zero polynomial).
  int min_precision() const;
  // Smallest coefficient valuation (INT_MAX for the zero polynomial).
  int min_valuation() const;

  Poly truncated(int prec) const;
  // Formal derivative; in characteristic 2 only odd powers survive.
  Poly derivative() const;
  // Horner evaluation.
  LaurentSeries eval(const LaurentSeries& point) const;
  // Constant terms of all coefficients (the t = 0 specialization).  Throws
  // PreconditionError if a coefficient has negative valuation and
  // InsufficientPrecision if a constant term is unknown.
  std::vector<GFElement> specialize_t0() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b) { return a + b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const LaurentSeries& c, const Poly& p);

 private:
  FieldPtr field_;
  std::vector<LaurentSeries> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

// Long division f = q g + r with deg r < deg g.  A leading coefficient of g
// equal to 1 at its precision is used as is; otherwise it is inverted as a
// Laurent series.  Throws DivisionByZero for g = 0 and InsufficientPrecision
// when the leading coefficient cannot be inverted.
DivMod poly_divmod(const Poly& f, const Poly& g);

// Monic gcd by the Euclidean algorithm, normalizing each remainder to be
// monic.  A remainder is accepted as zero only if it is known to vanish modulo
// t^zero_floor; otherwise InsufficientPrecision is thrown.
Poly poly_gcd(const Poly& f, const Poly& g, int zero_floor);

// s with s h = 1 modulo f, by the extended Euclidean algorithm.  Throws
// InsufficientPrecision if h and f are not coprime at the available precision.
Poly poly_inverse_mod(const Poly& h, const Poly& f, int zero_floor);

// Default zero floor: half the smallest coefficient precision of f.
int default_zero_floor(const Poly& f);

// gcd(f, f') = 1.
bool poly_separable(const Poly& f, int zero_floor);
bool poly_separable(const Poly& f);

// The labels a of the quadratic factors: the nonzero elements of
// F_{2^(n-2)} inside k.  Throws ConfigError when k does not contain that
// subfield.
std::vector<GFElement> quadratic_labels(int n, const GFContext& field);

// x^2 + a t x + 1.
Poly quadratic_factor(GFElement a, const FieldPtr& field, int prec);

// Whether x^2 + a t x + 1 has a root u0 + u1 t modulo t^2 with u0, u1 in k,
// by exhaustive search over k^2.
bool quadratic_has_root_mod_t2(GFElement a, const FieldPtr& field);

// mu(x) = prod_a (x^2 + a t x + 1) over the labels of quadratic_labels(n).
Poly build_mu(int n, const FieldPtr& field, int prec);

// pi_t(x) = (x + c1)(x + c2) mu(x).  Throws DegenerateInput if c1 = c2 and
// PreconditionError unless both are 1-units.
Poly build_pi(int n, const LaurentSeries& c1, const LaurentSeries& c2);

struct PAndF {
  Poly p;  // (d x^2 + b t x + 1) mu(x)
  Poly f;  // p + x^2 + 1
};

// Throws PreconditionError unless d is a 1-unit and b has valuation >= 0.
PAndF build_p_and_f(int n, const LaurentSeries& b, const LaurentSeries& d);

// "x^4 + (t)*x^2 + ..." with each coefficient printed by to_string.
std::string to_string(const Poly& p, int max_terms = 4);

}  // namespace sepdef

#endif  // SEPDEF_POLYRING_HPP_
