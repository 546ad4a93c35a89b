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

// Truncated formal Laurent series over GF(2^s).
//
// A series is known modulo t^precision.  Nonzero series store their
// coefficients from the valuation up to precision - 1, with a nonzero leading
// coefficient; a series that is zero at its precision stores nothing.
// Arithmetic propagates absolute precision the usual way:
//
//   prec(a + b) = min(prec a, prec b)
//   prec(a * b) = min(prec a + val b, prec b + val a)
//
// so every equality the library checks is "equal modulo t^p" for an explicit
// p, never equality of infinite objects.

#ifndef SEPDEF_LAURENT_HPP_
#define SEPDEF_LAURENT_HPP_

#include <span>
#include <string>
#include <vector>

#include "sepdef/finite_field.hpp"

namespace sepdef {

// Precision given to structural zeros (for example the coefficients a
// polynomial does not have).  Far above any working precision, so such zeros
// never limit the precision of a result.
inline constexpr int kExactPrecision = 1 << 24;

class LaurentSeries {
 public:
  // Detached zero with precision 0 and no field; exists so containers can be
  // resized.  Arithmetic with a detached series takes the other operand's
  // field.
  LaurentSeries() = default;

  // coeffs[i] is the coefficient of t^(val + i); the series is known modulo
  // t^prec.  Missing coefficients below prec are zero, those at or past it
  // stripped.
  LaurentSeries(FieldPtr field, int val, std::vector<GFElement> coeffs,
                int prec);

  static LaurentSeries zero(FieldPtr field, int prec);
  static LaurentSeries exact_zero(FieldPtr field) {
    return zero(std::move(field), kExactPrecision);
  }
  static LaurentSeries one(FieldPtr field, int prec);
  static LaurentSeries constant(FieldPtr field, GFElement c, int prec);
  // c * t^exponent.
  static LaurentSeries monomial(FieldPtr field, GFElement c, int exponent,
                                int prec);
  // sum_i coeffs[i] t^i.
  static LaurentSeries polynomial(FieldPtr field,
                                  std::vector<GFElement> coeffs, int prec);

  const FieldPtr& field() const { return field_; }
  int precision() const { return prec_; }
  // t-adic valuation; for a series that is zero at its precision this is the
  // precision itself (the valuation is only known to be at least that).
  int valuation() const { return val_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Number of stored coefficients, precision - valuation for nonzero series.
  int relative_precision() const { return static_cast<int>(coeffs_.size()); }
  std::span<const GFElement> coeffs() const { return coeffs_; }

  // Coefficient of t^exponent.  Throws InsufficientPrecision when exponent
  // is at or beyond the precision.
  GFElement coefficient(int exponent) const;
  GFElement leading_coefficient() const;

  LaurentSeries truncated(int prec) const;
  // Multiplication by t^k (precision moves with it).
  LaurentSeries shifted(int k) const;
  LaurentSeries scaled(GFElement c) const;

  LaurentSeries& operator+=(const LaurentSeries& b);
  LaurentSeries& operator*=(const LaurentSeries& b);

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + b;
  }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

 private:
  void normalize();

  FieldPtr field_;
  int val_ = 0;
  int prec_ = 0;
  std::vector<GFElement> coeffs_;
};

// Inverse of a series that is nonzero at its precision: shift out the
// valuation, scale to a 1-unit, and run the Newton step y <- u * y^2, which in
// characteristic 2 doubles the number of correct terms each round.  The
// result has valuation -val(a) and the same relative precision as a.
// Throws InsufficientPrecision when a is zero at its precision.
LaurentSeries inverse(const LaurentSeries& a);

// a in 1 + t k[[t]]: valuation 0 with constant term 1.
bool is_one_unit(const LaurentSeries& a);

LaurentSeries pow(const LaurentSeries& a, unsigned exponent);

// Valuation of a - b, i.e. the t-adic order to which the two agree.
inline int residual_valuation(const LaurentSeries& a, const LaurentSeries& b) {
  return (a - b).valuation();
}

// "1 + g*t^2 + (g+1)*t^3 + O(t^8)"; at most `max_terms` nonzero terms are
// printed when max_terms >= 0.
std::string to_string(const LaurentSeries& a, int max_terms = -1);

}  // namespace sepdef

#endif  // SEPDEF_LAURENT_HPP_
