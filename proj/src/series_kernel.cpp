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

#include "sepdef/detail/series_kernel.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SEPDEF_X86 1
#endif

namespace sepdef::detail {

namespace {

constexpr std::size_t kSchoolbookCutoff = 12;

struct Wide {
  std::uint64_t lo;
  std::uint64_t hi;
};

Wide clmul_soft(std::uint64_t a, std::uint64_t b) {
  Wide r{0, 0};
  for (int i = 0; i < 64; ++i) {
    if ((b >> i) & 1u) {
      r.lo ^= a << i;
      if (i != 0) r.hi ^= a >> (64 - i);
    }
  }
  return r;
}

#ifdef SEPDEF_X86
__attribute__((target("pclmul,sse4.1"))) void product_words_hw(
    const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
    std::size_t nb, std::uint64_t* c, std::size_t nc) {
  for (std::size_t i = 0; i < na && i < nc; ++i) {
    if (a[i] == 0) continue;
    const __m128i av = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
    const std::size_t jmax = std::min(nb, nc - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (b[j] == 0) continue;
      const __m128i bv = _mm_cvtsi64_si128(static_cast<long long>(b[j]));
      const __m128i p = _mm_clmulepi64_si128(av, bv, 0x00);
      c[i + j] ^= static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
      if (i + j + 1 < nc) {
        c[i + j + 1] ^= static_cast<std::uint64_t>(_mm_extract_epi64(p, 1));
      }
    }
  }
}
#endif

void product_words_soft(const std::uint64_t* a, std::size_t na,
                        const std::uint64_t* b, std::size_t nb,
                        std::uint64_t* c, std::size_t nc) {
  for (std::size_t i = 0; i < na && i < nc; ++i) {
    if (a[i] == 0) continue;
    const std::size_t jmax = std::min(nb, nc - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (b[j] == 0) continue;
      const Wide p = clmul_soft(a[i], b[j]);
      c[i + j] ^= p.lo;
      if (i + j + 1 < nc) c[i + j + 1] ^= p.hi;
    }
  }
}

bool detect_clmul() {
#ifdef SEPDEF_X86
  __builtin_cpu_init();
  return __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1");
#else
  return false;
#endif
}

const bool kHardwareClmul = detect_clmul();

// Packs `count` coefficients into consecutive `width`-bit slots.
void pack(std::span<const GFElement> src, std::size_t count, int width,
          std::vector<std::uint64_t>& dst) {
  std::size_t bit = 0;
  for (std::size_t i = 0; i < count; ++i, bit += width) {
    const std::uint64_t v = src[i].bits;
    if (v == 0) continue;
    const std::size_t word = bit >> 6;
    const unsigned off = bit & 63u;
    dst[word] ^= v << off;
    if (off + width > 64) dst[word + 1] ^= v >> (64 - off);
  }
}

}  // namespace

bool has_hardware_clmul() { return kHardwareClmul; }

void truncated_product_schoolbook(const GFContext& field,
                                  std::span<const GFElement> a,
                                  std::span<const GFElement> b,
                                  std::span<GFElement> out) {
  std::fill(out.begin(), out.end(), GFElement());
  const std::size_t len = out.size();
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    const std::size_t jmax = std::min(b.size(), len - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      out[i + j] += field.mul_unchecked(a[i], b[j]);
    }
  }
}

void truncated_product_clmul(const GFContext& field,
                             std::span<const GFElement> a,
                             std::span<const GFElement> b,
                             std::span<GFElement> out) {
  const std::size_t len = out.size();
  const int width = 2 * field.degree() - 1;
  const std::size_t words = (len * width + 63) / 64;
  const std::size_t na = std::min(a.size(), len);
  const std::size_t nb = std::min(b.size(), len);

  // One spare word absorbs the straddling write of the last slot.
  std::vector<std::uint64_t> pa(words + 1, 0), pb(words + 1, 0), pc(words + 1, 0);
  pack(a, na, width, pa);
  pack(b, nb, width, pb);
  const std::size_t wa = (na * width + 63) / 64;
  const std::size_t wb = (nb * width + 63) / 64;
#ifdef SEPDEF_X86
  if (kHardwareClmul) {
    product_words_hw(pa.data(), wa, pb.data(), wb, pc.data(), words);
  } else {
    product_words_soft(pa.data(), wa, pb.data(), wb, pc.data(), words);
  }
#else
  product_words_soft(pa.data(), wa, pb.data(), wb, pc.data(), words);
#endif

  const auto reduce = field.wide_reduction();
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  std::size_t bit = 0;
  for (std::size_t k = 0; k < len; ++k, bit += width) {
    const std::size_t word = bit >> 6;
    const unsigned off = bit & 63u;
    std::uint64_t v = pc[word] >> off;
    if (off + width > 64) v |= pc[word + 1] << (64 - off);
    out[k] = GFElement(reduce[v & mask]);
  }
}

void truncated_product(const GFContext& field, std::span<const GFElement> a,
                       std::span<const GFElement> b, std::span<GFElement> out) {
  const std::size_t shorter = std::min({a.size(), b.size(), out.size()});
  if (field.degree() > 8 || shorter < kSchoolbookCutoff) {
    truncated_product_schoolbook(field, a, b, out);
  } else {
    truncated_product_clmul(field, a, b, out);
  }
}

}  // namespace sepdef::detail
