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

#include <algorithm>
#include <optional>
#include <utility>

#include "sepdef/detail/series_kernel.hpp"
#include "sepdef/errors.hpp"

namespace sepdef {

namespace {

const FieldPtr& pick_field(const LaurentSeries& a, const LaurentSeries& b) {
  return a.field() ? a.field() : b.field();
}

}  // namespace

LaurentSeries::LaurentSeries(FieldPtr field, int val,
                             std::vector<GFElement> coeffs, int prec)
    : field_(std::move(field)), val_(val), prec_(prec),
      coeffs_(std::move(coeffs)) {
  coeffs_.resize(std::max(0, prec_ - val_));
  normalize();
}

LaurentSeries LaurentSeries::zero(FieldPtr field, int prec) {
  return LaurentSeries(std::move(field), prec, {}, prec);
}

LaurentSeries LaurentSeries::one(FieldPtr field, int prec) {
  const GFElement c = field->one();
  return constant(std::move(field), c, prec);
}

LaurentSeries LaurentSeries::constant(FieldPtr field, GFElement c, int prec) {
  return monomial(std::move(field), c, 0, prec);
}

LaurentSeries LaurentSeries::monomial(FieldPtr field, GFElement c,
                                      int exponent, int prec) {
  field->check(c);
  if (exponent >= prec) return zero(std::move(field), prec);
  std::vector<GFElement> coeffs(prec - exponent);
  coeffs[0] = c;
  return LaurentSeries(std::move(field), exponent, std::move(coeffs), prec);
}

LaurentSeries LaurentSeries::polynomial(FieldPtr field,
                                        std::vector<GFElement> coeffs,
                                        int prec) {
  for (GFElement c : coeffs) field->check(c);
  return LaurentSeries(std::move(field), 0, std::move(coeffs), prec);
}

void LaurentSeries::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](GFElement c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    val_ = prec_;
    return;
  }
  const auto lead = static_cast<int>(first - coeffs_.begin());
  if (lead != 0) {
    coeffs_.erase(coeffs_.begin(), first);
    val_ += lead;
  }
}

GFElement LaurentSeries::coefficient(int exponent) const {
  if (exponent >= prec_) {
    throw InsufficientPrecision("coefficient of t^" + std::to_string(exponent) +
                                " requested from a series known modulo t^" +
                                std::to_string(prec_));
  }
  if (exponent < val_) return GFElement();
  return coeffs_[exponent - val_];
}

GFElement LaurentSeries::leading_coefficient() const {
  if (is_zero()) {
    throw InsufficientPrecision("series is zero modulo t^" +
                                std::to_string(prec_));
  }
  return coeffs_.front();
}

LaurentSeries LaurentSeries::truncated(int prec) const {
  if (prec >= prec_) return *this;
  LaurentSeries r = *this;
  r.prec_ = prec;
  if (r.is_zero() || r.val_ >= prec) {
    r.coeffs_.clear();
    r.val_ = prec;
  } else {
    r.coeffs_.resize(prec - r.val_);
  }
  return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries r = *this;
  r.val_ += k;
  r.prec_ += k;
  return r;
}

LaurentSeries LaurentSeries::scaled(GFElement c) const {
  if (c.is_zero()) return zero(field_, prec_);
  LaurentSeries r = *this;
  for (GFElement& x : r.coeffs_) x = field_->mul_unchecked(x, c);
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int prec = std::min(a.prec_, b.prec_);
  const int lo = std::min(a.val_, b.val_);
  LaurentSeries r;
  r.field_ = pick_field(a, b);
  r.prec_ = prec;
  if (lo >= prec) {
    r.val_ = prec;
    return r;
  }
  r.val_ = lo;
  r.coeffs_.assign(prec - lo, GFElement());
  for (const LaurentSeries* s : {&a, &b}) {
    const int n = std::min(s->relative_precision(), prec - s->val_);
    for (int i = 0; i < n; ++i) r.coeffs_[s->val_ - lo + i] += s->coeffs_[i];
  }
  r.normalize();
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& b) {
  *this = *this + b;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
  LaurentSeries r;
  r.field_ = pick_field(a, b);
  r.prec_ = prec;
  if (a.is_zero() || b.is_zero()) {
    r.val_ = prec;
    return r;
  }
  r.val_ = a.val_ + b.val_;
  const int len = prec - r.val_;
  r.coeffs_.resize(len);
  detail::truncated_product(*r.field_, a.coeffs_, b.coeffs_, r.coeffs_);
  r.normalize();
  return r;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& b) {
  *this = *this * b;
  return *this;
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  return a * inverse(b);
}

LaurentSeries inverse(const LaurentSeries& a) {
  if (a.is_zero()) {
    throw InsufficientPrecision("cannot invert a series that is zero modulo t^" +
                                std::to_string(a.precision()));
  }
  const GFContext& f = *a.field();
  const int len = a.relative_precision();
  const GFElement lead_inv = f.inv(a.leading_coefficient());

  // u = a / (lead * t^val) is a 1-unit with `len` known terms.
  std::vector<GFElement> u(a.coeffs().begin(), a.coeffs().end());
  for (GFElement& c : u) c = f.mul_unchecked(c, lead_inv);

  std::vector<GFElement> y{f.one()};
  std::vector<GFElement> sq;
  int known = 1;
  while (known < len) {
    const int next = std::min(2 * known, len);
    sq.assign(next, GFElement());
    for (int i = 0; i < known && 2 * i < next; ++i) {
      sq[2 * i] = f.mul_unchecked(y[i], y[i]);
    }
    y.assign(next, GFElement());
    detail::truncated_product(f, std::span<const GFElement>(u).first(next), sq,
                              y);
    known = next;
  }
  for (GFElement& c : y) c = f.mul_unchecked(c, lead_inv);
  const int val = -a.valuation();
  return LaurentSeries(a.field(), val, std::move(y), val + len);
}

bool is_one_unit(const LaurentSeries& a) {
  return !a.is_zero() && a.valuation() == 0 &&
         a.leading_coefficient() == a.field()->one();
}

LaurentSeries pow(const LaurentSeries& a, unsigned exponent) {
  if (exponent == 0) return LaurentSeries::one(a.field(), a.precision());
  std::optional<LaurentSeries> result;
  LaurentSeries base = a;
  while (true) {
    if (exponent & 1u) result = result ? *result * base : base;
    exponent >>= 1;
    if (exponent == 0) break;
    base = base * base;
  }
  return *result;
}

std::string to_string(const LaurentSeries& a, int max_terms) {
  std::string out;
  int printed = 0;
  for (int i = 0; i < a.relative_precision(); ++i) {
    const GFElement c = a.coeffs()[i];
    if (c.is_zero()) continue;
    if (max_terms >= 0 && printed == max_terms) {
      out += " + ...";
      break;
    }
    const int e = a.valuation() + i;
    if (!out.empty()) out += " + ";
    const std::string cs = to_string(c);
    const bool compound = cs.find('+') != std::string::npos;
    if (e == 0) {
      out += cs;
    } else {
      if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
      out += e == 1 ? "t" : "t^" + std::to_string(e);
    }
    ++printed;
  }
  if (out.empty()) out = "0";
  return out + " + O(t^" + std::to_string(a.precision()) + ")";
}

}  // namespace sepdef
