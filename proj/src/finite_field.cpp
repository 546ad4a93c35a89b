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

#include "sepdef/finite_field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <string>

#include "sepdef/errors.hpp"

namespace sepdef {

namespace {

// One primitive polynomial per degree, bit i = coefficient of x^i.
constexpr std::array<std::uint32_t, kMaxFieldDegree + 1> kModulusTable = {
    0x0,                                        // unused
    0x3,     0x7,     0xB,     0x13,            // 1..4
    0x25,    0x43,    0x83,    0x11D,           // 5..8
    0x211,   0x409,   0x805,   0x1053,          // 9..12
    0x201B,  0x4443,  0x8003,  0x1100B,         // 13..16
};

int bit_degree(std::uint32_t p) {
  int d = -1;
  while (p != 0) {
    ++d;
    p >>= 1;
  }
  return d;
}

std::uint32_t poly_mod_gf2(std::uint32_t a, std::uint32_t m) {
  const int dm = bit_degree(m);
  for (int da = bit_degree(a); da >= dm; da = bit_degree(a)) {
    a ^= m << (da - dm);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

std::uint32_t default_modulus(int degree) {
  if (degree < 1 || degree > kMaxFieldDegree) {
    throw ConfigError("field degree " + std::to_string(degree) +
                      " outside the supported range 1.." +
                      std::to_string(kMaxFieldDegree));
  }
  return kModulusTable[degree];
}

bool is_irreducible_gf2(std::uint32_t poly) {
  const int d = bit_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t q = 2; bit_degree(q) <= d / 2; ++q) {
    if (poly_mod_gf2(poly, q) == 0) return false;
  }
  return true;
}

std::uint32_t reference_mul(std::uint32_t a, std::uint32_t b,
                            std::uint32_t modulus, int degree) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1u) prod ^= std::uint64_t{a} << i;
  }
  for (int i = 2 * degree; i >= degree; --i) {
    if ((prod >> i) & 1u) prod ^= std::uint64_t{modulus} << (i - degree);
  }
  return static_cast<std::uint32_t>(prod);
}

GFContext::GFContext(int degree) : GFContext(degree, default_modulus(degree)) {}

GFContext::GFContext(int degree, std::uint32_t modulus)
    : degree_(degree), modulus_(modulus) {
  if (degree < 1 || degree > kMaxFieldDegree) {
    throw ConfigError("field degree " + std::to_string(degree) +
                      " outside the supported range");
  }
  if (bit_degree(modulus) != degree || !is_irreducible_gf2(modulus)) {
    throw ConfigError("modulus " + to_hex(modulus, degree + 1) +
                      " is not an irreducible polynomial of degree " +
                      std::to_string(degree));
  }
  build_tables();
}

std::shared_ptr<const GFContext> GFContext::make(int degree) {
  return std::make_shared<const GFContext>(degree);
}

void GFContext::build_tables() {
  const std::uint32_t q = size();
  const std::uint64_t units = q - 1;
  const auto factors = prime_factors(units);

  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e != 0) {
      if (e & 1u) r = reference_mul(r, a, modulus_, degree_);
      a = reference_mul(a, a, modulus_, degree_);
      e >>= 1;
    }
    return r;
  };

  std::uint32_t gen = 1;
  if (units > 1) {
    for (gen = 2; gen < q; ++gen) {
      bool primitive = true;
      for (auto p : factors) {
        if (slow_pow(gen, units / p) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) break;
    }
  }

  log_.assign(q, 0);
  exp_.assign(2 * units + 1, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < units; ++i) {
    exp_[i] = x;
    exp_[i + units] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = reference_mul(x, gen, modulus_, degree_);
  }
  exp_[2 * units] = exp_[0];

  if (degree_ <= 8) {
    const std::uint32_t wide_size = std::uint32_t{1} << (2 * degree_ - 1);
    wide_.resize(wide_size);
    for (std::uint32_t v = 0; v < wide_size; ++v) {
      wide_[v] = static_cast<std::uint16_t>(
          degree_ == 1 ? v : poly_mod_gf2(v, modulus_));
    }
  }
}

void GFContext::check(GFElement a) const {
  if (!contains(a)) {
    throw DimensionError("element with bits " + to_hex(a.bits, 32) +
                         " has more than " + std::to_string(degree_) +
                         " coefficients");
  }
}

GFElement GFContext::mul(GFElement a, GFElement b) const {
  check(a);
  check(b);
  return mul_unchecked(a, b);
}

GFElement GFContext::inv(GFElement a) const {
  check(a);
  if (a.is_zero()) throw DivisionByZero("inverse of zero in GF(2^s)");
  const std::uint32_t units = size() - 1;
  return GFElement(exp_[(units - log_[a.bits]) % units]);
}

GFElement GFContext::pow(GFElement a, std::uint64_t e) const {
  check(a);
  GFElement result = one();
  while (e != 0) {
    if (e & 1u) result = mul_unchecked(result, a);
    a = mul_unchecked(a, a);
    e >>= 1;
  }
  return result;
}

int field_degree_for(int n) { return std::max(2, n - 2); }

GFElement gf_mul(GFElement a, GFElement b, const GFContext& ctx) {
  return ctx.mul(a, b);
}

GFElement gf_inv(GFElement a, const GFContext& ctx) { return ctx.inv(a); }

GFElement gf_pow(GFElement a, std::uint64_t e, const GFContext& ctx) {
  return ctx.pow(a, e);
}

std::vector<GFElement> gf_enumerate_units(const GFContext& ctx) {
  std::vector<GFElement> out;
  out.reserve(ctx.size() - 1);
  for (std::uint32_t v = 1; v < ctx.size(); ++v) out.emplace_back(v);
  return out;
}

std::vector<GFElement> gf_subfield_units(const GFContext& ctx,
                                         int sub_degree) {
  if (sub_degree < 1 || ctx.degree() % sub_degree != 0) {
    throw ConfigError("GF(2^" + std::to_string(sub_degree) +
                      ") is not a subfield of GF(2^" +
                      std::to_string(ctx.degree()) + ")");
  }
  std::vector<GFElement> out;
  const std::uint64_t sub_order = std::uint64_t{1} << sub_degree;
  for (GFElement a : gf_enumerate_units(ctx)) {
    if (ctx.pow(a, sub_order) == a) out.push_back(a);
  }
  return out;
}

std::uint64_t gf_order(GFElement a, const GFContext& ctx) {
  if (a.is_zero()) throw DivisionByZero("zero has no multiplicative order");
  std::uint64_t order = ctx.size() - 1;
  for (auto p : prime_factors(order)) {
    while (order % p == 0 && ctx.pow(a, order / p) == ctx.one()) order /= p;
  }
  return order;
}

GFElement gf_multiplicative_generator(const GFContext& ctx) {
  for (GFElement a : gf_enumerate_units(ctx)) {
    if (gf_order(a, ctx) == ctx.size() - 1) return a;
  }
  return ctx.one();  // unreachable: finite unit groups are cyclic
}

std::string to_string(GFElement a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = 31; i >= 0; --i) {
    if (((a.bits >> i) & 1u) == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'g';
    } else {
      out += "g^" + std::to_string(i);
    }
  }
  return out;
}

std::string to_hex(std::uint32_t bits, int bit_count) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int bytes = std::max(1, (bit_count + 7) / 8);
  std::string out;
  out.reserve(2 * bytes);
  for (int i = 0; i < bytes; ++i) {
    const std::uint32_t byte = (bits >> (8 * i)) & 0xFFu;
    out += kDigits[byte >> 4];
    out += kDigits[byte & 0xFu];
  }
  return out;
}

std::string to_hex(GFElement a, const GFContext& ctx) {
  return to_hex(a.bits, ctx.degree());
}

std::uint32_t bits_from_hex(std::string_view hex) {
  if (hex.empty() || hex.size() % 2 != 0 || hex.size() > 8) {
    throw ConfigError("malformed hex bit string '" + std::string(hex) + "'");
  }
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < hex.size() / 2; ++i) {
    unsigned byte = 0;
    auto [ptr, ec] =
        std::from_chars(hex.data() + 2 * i, hex.data() + 2 * i + 2, byte, 16);
    if (ec != std::errc() || ptr != hex.data() + 2 * i + 2) {
      throw ConfigError("malformed hex bit string '" + std::string(hex) + "'");
    }
    bits |= static_cast<std::uint32_t>(byte) << (8 * i);
  }
  return bits;
}

GFElement gf_from_hex(std::string_view hex, const GFContext& ctx) {
  GFElement a(bits_from_hex(hex));
  ctx.check(a);
  return a;
}

GFElement parse_gf_literal(std::string_view text, const GFContext& ctx) {
  auto fail = [&]() -> GFElement {
    throw ConfigError("cannot parse field element literal '" +
                      std::string(text) + "'");
  };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) return fail();

  if (std::isdigit(static_cast<unsigned char>(s[0])) &&
      s.find('g') == std::string::npos && s.find('+') == std::string::npos) {
    std::uint32_t bits = 0;
    int base = 10;
    std::string_view digits = s;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
      base = 16;
      digits.remove_prefix(2);
    }
    auto [ptr, ec] = std::from_chars(digits.data(),
                                     digits.data() + digits.size(), bits, base);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return fail();
    if (!ctx.contains(GFElement(bits))) {
      throw ConfigError("literal '" + std::string(text) +
                        "' is not an element of GF(2^" +
                        std::to_string(ctx.degree()) + ")");
    }
    return GFElement(bits);
  }

  // Sum of powers of g; powers at or above the degree are reduced.
  GFElement acc;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('+', pos);
    if (next == std::string::npos) next = s.size();
    std::string_view term(s.data() + pos, next - pos);
    int exponent = 0;
    if (term == "1") {
      exponent = 0;
    } else if (term == "g") {
      exponent = 1;
    } else if (term.size() > 2 && term.substr(0, 2) == "g^") {
      auto [ptr, ec] = std::from_chars(term.data() + 2,
                                       term.data() + term.size(), exponent);
      if (ec != std::errc() || ptr != term.data() + term.size() ||
          exponent < 0) {
        return fail();
      }
    } else {
      return fail();
    }
    acc += ctx.pow(ctx.g(), static_cast<std::uint64_t>(exponent));
    pos = next + 1;
  }
  return acc;
}

}  // namespace sepdef
