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

// Truncated products of coefficient vectors over GF(2^s).

#ifndef SEPDEF_DETAIL_SERIES_KERNEL_HPP_
#define SEPDEF_DETAIL_SERIES_KERNEL_HPP_

#include <span>

#include "sepdef/finite_field.hpp"

namespace sepdef::detail {

// out[k] = sum_{i + j = k} a[i] * b[j] for k < out.size(); entries of a, b
// past their sizes are zero.  Dispatches between the two kernels below.
void truncated_product(const GFContext& field, std::span<const GFElement> a,
                       std::span<const GFElement> b, std::span<GFElement> out);

void truncated_product_schoolbook(const GFContext& field,
                                  std::span<const GFElement> a,
                                  std::span<const GFElement> b,
                                  std::span<GFElement> out);

// Kronecker substitution: coefficients are packed into (2s - 1)-bit slots of
// a single F_2[X] polynomial, multiplied with 64x64 carry-less products, and
// each slot is reduced modulo the field modulus.  Requires s <= 8.
void truncated_product_clmul(const GFContext& field,
                             std::span<const GFElement> a,
                             std::span<const GFElement> b,
                             std::span<GFElement> out);

// Whether the hardware carry-less multiply is used by the clmul kernel.
bool has_hardware_clmul();

}  // namespace sepdef::detail

#endif  // SEPDEF_DETAIL_SERIES_KERNEL_HPP_
