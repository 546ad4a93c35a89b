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

// Arithmetic in GF(2^s), s <= 16, in a fixed polynomial basis.
//
// An element is a bit vector of length s: bit i is the coefficient of g^i,
// where g is the class of the indeterminate modulo the field's modulus.
// Addition is XOR.  Multiplication goes through log/antilog tables built at
// context construction from a reference carry-less multiply.

#ifndef SEPDEF_FINITE_FIELD_HPP_
#define SEPDEF_FINITE_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sepdef {

struct GFElement {
  std::uint32_t bits = 0;

  constexpr GFElement() = default;
  constexpr explicit GFElement(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }

  friend constexpr GFElement operator+(GFElement a, GFElement b) {
    return GFElement(a.bits ^ b.bits);
  }
  // Subtraction coincides with addition in characteristic 2.
  friend constexpr GFElement operator-(GFElement a, GFElement b) {
    return a + b;
  }
  constexpr GFElement& operator+=(GFElement b) {
    bits ^= b.bits;
    return *this;
  }
  friend constexpr bool operator==(GFElement, GFElement) = default;
  friend constexpr auto operator<=>(GFElement, GFElement) = default;
};

inline constexpr int kMaxFieldDegree = 16;

// The hardcoded modulus for GF(2^degree), 1 <= degree <= 16.  Every entry is a
// primitive polynomial, so g generates the unit group.
std::uint32_t default_modulus(int degree);

// Irreducibility over F_2 by trial division by every polynomial of degree at
// most deg(poly)/2.
bool is_irreducible_gf2(std::uint32_t poly);

// Reference product of two bit polynomials reduced modulo `modulus` (bit
// `degree` set).  Slow; used to build tables and as a test oracle.
std::uint32_t reference_mul(std::uint32_t a, std::uint32_t b,
                            std::uint32_t modulus, int degree);

class GFContext {
 public:
  // GF(2^degree) with default_modulus(degree).
  explicit GFContext(int degree);
  // Throws ConfigError when `modulus` is not an irreducible of that degree.
  GFContext(int degree, std::uint32_t modulus);

  static std::shared_ptr<const GFContext> make(int degree);

  int degree() const { return degree_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return std::uint32_t{1} << degree_; }

  GFElement zero() const { return GFElement(0); }
  GFElement one() const { return GFElement(1); }
  // The class of the indeterminate (equal to one when degree == 1).
  GFElement g() const { return GFElement(degree_ == 1 ? 1u : 2u); }

  bool contains(GFElement a) const { return (a.bits >> degree_) == 0; }
  // Throws DimensionError if `a` is not an element of this field.
  void check(GFElement a) const;

  // Table-driven product without membership checks.
  GFElement mul_unchecked(GFElement a, GFElement b) const {
    if (a.bits == 0 || b.bits == 0) return GFElement(0);
    return GFElement(exp_[log_[a.bits] + log_[b.bits]]);
  }

  GFElement mul(GFElement a, GFElement b) const;
  GFElement inv(GFElement a) const;
  GFElement pow(GFElement a, std::uint64_t e) const;

  // Reduction of an unreduced product of two field elements, indexed by the
  // (2*degree - 1)-bit carry-less product.  Only built for degree <= 8; empty
  // otherwise.
  std::span<const std::uint16_t> wide_reduction() const { return wide_; }

 private:
  void build_tables();

  int degree_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // doubled so exp_[i + j] needs no mod
  std::vector<std::uint16_t> wide_;
};

using FieldPtr = std::shared_ptr<const GFContext>;

// Field selection for the deformation of the order-2^n groups: GF(2^s) with
// s = max(2, n - 2).  The construction needs two distinct nonzero elements,
// which F_2 does not have.
int field_degree_for(int n);

GFElement gf_mul(GFElement a, GFElement b, const GFContext& ctx);
// Throws DivisionByZero for a == 0.
GFElement gf_inv(GFElement a, const GFContext& ctx);
// Square-and-multiply.
GFElement gf_pow(GFElement a, std::uint64_t e, const GFContext& ctx);

// All 2^s - 1 nonzero elements in increasing bit order.
std::vector<GFElement> gf_enumerate_units(const GFContext& ctx);

// The nonzero elements of the subfield GF(2^sub_degree), i.e. the a with
// a^(2^sub_degree) = a, in increasing bit order.  sub_degree must divide the
// field degree.
std::vector<GFElement> gf_subfield_units(const GFContext& ctx, int sub_degree);

// Multiplicative order of a unit.
std::uint64_t gf_order(GFElement a, const GFContext& ctx);

// Smallest (in bit order) generator of the unit group.
GFElement gf_multiplicative_generator(const GFContext& ctx);

// "0", "1", "g", "g^2+g+1", ...
std::string to_string(GFElement a);

// Little-endian hex: the bit vector is split into bytes, least significant
// byte first, each byte as two lowercase hex digits.  `bit_count` fixes the
// width (s for elements, s + 1 for a modulus).
std::string to_hex(std::uint32_t bits, int bit_count);
std::string to_hex(GFElement a, const GFContext& ctx);
std::uint32_t bits_from_hex(std::string_view hex);
GFElement gf_from_hex(std::string_view hex, const GFContext& ctx);

// Accepts decimal or 0x-prefixed bit patterns ("3", "0x3") and sums of powers
// of g ("g+1", "g^3+g", "1").  Throws ConfigError on bad syntax or an element
// outside the field.
GFElement parse_gf_literal(std::string_view text, const GFContext& ctx);

}  // namespace sepdef

#endif  // SEPDEF_FINITE_FIELD_HPP_
