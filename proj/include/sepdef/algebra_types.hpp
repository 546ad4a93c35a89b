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

#ifndef SEPDEF_ALGEBRA_TYPES_HPP_
#define SEPDEF_ALGEBRA_TYPES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sepdef/errors.hpp"
#include "sepdef/finite_field.hpp"

namespace sepdef {

enum class GroupKind { kQuaternion, kDihedral };

inline std::string_view to_string(GroupKind kind) {
  return kind == GroupKind::kQuaternion ? "quaternion" : "dihedral";
}

// Accepts "quaternion" and "dihedral"; throws ConfigError otherwise.
inline GroupKind parse_group_kind(std::string_view name) {
  if (name == "quaternion") return GroupKind::kQuaternion;
  if (name == "dihedral") return GroupKind::kDihedral;
  throw ConfigError("unknown group '" + std::string(name) +
                    "' (expected quaternion or dihedral)");
}

// Multiplication table of a k-algebra on a fixed basis: table[p * dim + q]
// is the coordinate vector of b_p b_q.
struct StructureConstants {
  int dim = 0;
  std::vector<std::vector<GFElement>> table;

  const std::vector<GFElement>& product(int p, int q) const {
    return table[p * dim + q];
  }
  friend bool operator==(const StructureConstants&,
                         const StructureConstants&) = default;
};

}  // namespace sepdef

#endif  // SEPDEF_ALGEBRA_TYPES_HPP_
