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

#include "sepdef/group_reference.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "sepdef/errors.hpp"

namespace sepdef {
namespace {

using Mat = std::array<std::complex<double>, 4>;

Mat matmul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

bool close(const Mat& a, const Mat& b) {
  for (int k = 0; k < 4; ++k) {
    if (std::abs(a[k] - b[k]) > 1e-9) return false;
  }
  return true;
}

// Faithful 2-dimensional complex representation: sigma acts as a rotation
// by a primitive 2^(n-1)-th root of unity, y swaps the eigenlines.
Mat image(GroupElement g, int n, GroupKind kind) {
  const int half = 1 << (n - 1);
  const auto zeta = std::polar(1.0, 2 * std::numbers::pi / half);
  const Mat sigma{zeta, 0.0, 0.0, std::conj(zeta)};
  const Mat y = kind == GroupKind::kQuaternion ? Mat{0.0, -1.0, 1.0, 0.0}
                                               : Mat{0.0, 1.0, 1.0, 0.0};
  Mat out{1.0, 0.0, 0.0, 1.0};
  for (int k = 0; k < g.i; ++k) out = matmul(out, sigma);
  if (g.j == 1) out = matmul(out, y);
  return out;
}

class Groups : public ::testing::TestWithParam<std::tuple<int, GroupKind>> {};

TEST_P(Groups, TableMatchesMatrixRepresentation) {
  const auto [n, kind] = GetParam();
  const auto g = build_group_table(n, kind);
  ASSERT_EQ(g.order(), 1 << n);
  std::vector<Mat> images;
  for (int a = 0; a < g.order(); ++a) images.push_back(image(g.element(a), n, kind));
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (a != b) EXPECT_FALSE(close(images[a], images[b]));
      EXPECT_TRUE(close(matmul(images[a], images[b]), images[g.mul(a, b)]));
    }
  }
}

TEST_P(Groups, ClassCountMatchesComponentCount) {
  const auto [n, kind] = GetParam();
  EXPECT_EQ(conjugacy_class_count(build_group_table(n, kind)),
            (1 << (n - 2)) + 3);
}

TEST_P(Groups, StructureConstantsAreAGroupBasis) {
  const auto [n, kind] = GetParam();
  const auto g = build_group_table(n, kind);
  const auto field = GFContext(2);
  const auto sc = group_algebra_structure_constants(g, field);
  for (int p = 0; p < sc.dim; ++p) {
    for (int q = 0; q < sc.dim; ++q) {
      int ones = 0;
      for (auto c : sc.product(p, q)) {
        if (c == field.one()) ++ones;
        else EXPECT_TRUE(c.is_zero());
      }
      EXPECT_EQ(ones, 1);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    All, Groups,
    ::testing::Combine(::testing::Values(3, 4, 5, 6),
                       ::testing::Values(GroupKind::kQuaternion,
                                         GroupKind::kDihedral)));

TEST(GroupTable, SmallExamples) {
  const auto q8 = build_group_table(3, GroupKind::kQuaternion);
  const int sigma = q8.index({1, 0});
  const int y = q8.index({0, 1});
  EXPECT_EQ(q8.mul(sigma, q8.index({3, 0})), q8.identity());
  EXPECT_EQ(q8.mul(y, y), q8.index({2, 0}));
  EXPECT_EQ(q8.mul(q8.mul(y, y), q8.mul(y, y)), q8.identity());
  EXPECT_EQ(q8.mul(y, sigma), q8.index({3, 1}));
  // y^2 is central.
  for (int a = 0; a < q8.order(); ++a) {
    EXPECT_EQ(q8.mul(a, q8.mul(y, y)), q8.mul(q8.mul(y, y), a));
  }
  const auto d8 = build_group_table(3, GroupKind::kDihedral);
  EXPECT_EQ(d8.mul(d8.index({0, 1}), d8.index({0, 1})), d8.identity());
}

TEST(GroupTable, QuaternionHasOneInvolution) {
  for (int n = 3; n <= 6; ++n) {
    const auto q = build_group_table(n, GroupKind::kQuaternion);
    const auto d = build_group_table(n, GroupKind::kDihedral);
    auto involutions = [](const GroupTable& g) {
      int count = 0;
      for (int a = 1; a < g.order(); ++a) count += g.mul(a, a) == g.identity();
      return count;
    };
    EXPECT_EQ(involutions(q), 1);
    EXPECT_EQ(involutions(d), (1 << (n - 1)) + 1);
  }
}

TEST(GroupTable, Errors) {
  EXPECT_THROW(build_group_table(2, GroupKind::kQuaternion), PreconditionError);
  EXPECT_THROW(parse_group_kind("cyclic"), ConfigError);
  EXPECT_EQ(parse_group_kind("dihedral"), GroupKind::kDihedral);
}

TEST(GroupAlgebra, NamedProducts) {
  const GFContext field(2);
  for (int n = 3; n <= 5; ++n) {
    const int half = 1 << (n - 1);
    const auto g = build_group_table(n, GroupKind::kQuaternion);
    const auto sc = group_algebra_structure_constants(g, field);
    const int sigma = g.index({1, 0});
    const int y = g.index({0, 1});
    EXPECT_EQ(sc.product(sigma, g.index({half - 1, 0}))[0], field.one());
    EXPECT_EQ(sc.product(y, y)[g.index({half / 2, 0})], field.one());
    EXPECT_EQ(sc.product(y, sigma)[g.index({half - 1, 1})], field.one());
  }
}

}  // namespace
}  // namespace sepdef
