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

#include <string>

#include "sepdef/errors.hpp"

namespace sepdef {

namespace {

void validate(const GroupTable& g) {
  const int order = g.order();
  const int half = order / 2;
  auto fail = [&](const std::string& what) {
    throw ConsistencyError(std::string(to_string(g.kind())) + " table of order " +
                           std::to_string(order) + ": " + what);
  };
  for (int a = 0; a < order; ++a) {
    if (g.mul(g.identity(), a) != a || g.mul(a, g.identity()) != a) {
      fail("identity fails");
    }
    if (g.mul(a, g.inverse(a)) != g.identity() ||
        g.mul(g.inverse(a), a) != g.identity()) {
      fail("inverse fails");
    }
    for (int b = 0; b < order; ++b) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < order; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) fail("not associative");
      }
    }
  }
  const int sigma = g.index({1, 0});
  const int y = g.index({0, 1});
  int power = g.identity();
  for (int k = 0; k < half; ++k) {
    if (k > 0 && power == g.identity()) fail("sigma has order below 2^(n-1)");
    power = g.mul(power, sigma);
  }
  if (power != g.identity()) fail("sigma^(2^(n-1)) != 1");
  if (g.mul(g.mul(y, sigma), g.inverse(y)) != g.inverse(sigma)) {
    fail("y sigma y^-1 != sigma^-1");
  }
  const int y_squared = g.kind() == GroupKind::kQuaternion
                            ? g.index({half / 2, 0})
                            : g.identity();
  if (g.mul(y, y) != y_squared) fail("wrong value of y^2");
}

}  // namespace

GroupTable build_group_table(int n, GroupKind kind) {
  if (n < 3) throw PreconditionError("group tables need n >= 3");
  GroupTable g;
  g.n_ = n;
  g.kind_ = kind;
  g.order_ = 1 << n;
  const int half = g.order_ / 2;
  const int y_square_power = kind == GroupKind::kQuaternion ? half / 2 : 0;
  g.table_.resize(g.order_ * g.order_);
  for (int a = 0; a < g.order_; ++a) {
    const auto [i, j] = g.element(a);
    for (int b = 0; b < g.order_; ++b) {
      const auto [k, l] = g.element(b);
      int power = j == 0 ? i + k : i - k;
      if (j == 1 && l == 1) power += y_square_power;
      power = ((power % half) + half) % half;
      g.table_[a * g.order_ + b] = g.index({power, (j + l) % 2});
    }
  }
  g.inverse_.assign(g.order_, -1);
  for (int a = 0; a < g.order_; ++a) {
    for (int b = 0; b < g.order_; ++b) {
      if (g.mul(a, b) == g.identity()) g.inverse_[a] = b;
    }
    if (g.inverse_[a] < 0) {
      throw ConsistencyError("element without inverse in group table");
    }
  }
  validate(g);
  return g;
}

int conjugacy_class_count(const GroupTable& g) {
  std::vector<bool> seen(g.order(), false);
  int classes = 0;
  for (int a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    ++classes;
    for (int h = 0; h < g.order(); ++h) {
      seen[g.mul(g.mul(h, a), g.inverse(h))] = true;
    }
  }
  return classes;
}

StructureConstants group_algebra_structure_constants(const GroupTable& g,
                                                     const GFContext& field) {
  StructureConstants sc;
  sc.dim = g.order();
  sc.table.reserve(sc.dim * sc.dim);
  for (int a = 0; a < sc.dim; ++a) {
    for (int b = 0; b < sc.dim; ++b) {
      std::vector<GFElement> coords(sc.dim, field.zero());
      coords[g.mul(a, b)] = field.one();
      sc.table.push_back(std::move(coords));
    }
  }
  return sc;
}

}  // namespace sepdef
