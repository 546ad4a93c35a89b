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

// Multiplication tables of the generalized quaternion group Q_{2^n} and the
// dihedral group D_{2^n}, both written as pairs (i, j) <-> sigma^i y^j with
// 0 <= i < 2^(n-1), j in {0, 1}, and the structure constants of their group
// algebras.  Independent of the deformation code; used as ground truth.

#ifndef SEPDEF_GROUP_REFERENCE_HPP_
#define SEPDEF_GROUP_REFERENCE_HPP_

#include <vector>

#include "sepdef/algebra_types.hpp"
#include "sepdef/finite_field.hpp"

namespace sepdef {

struct GroupElement {
  int i;  // power of sigma
  int j;  // power of y
  friend bool operator==(GroupElement, GroupElement) = default;
};

class GroupTable {
 public:
  int n() const { return n_; }
  GroupKind kind() const { return kind_; }
  int order() const { return order_; }
  // Index of sigma^i y^j is i + j 2^(n-1), matching the deformation basis.
  int index(GroupElement g) const { return g.i + g.j * (order_ / 2); }
  GroupElement element(int index) const {
    return {index % (order_ / 2), index / (order_ / 2)};
  }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int identity() const { return 0; }
  int inverse(int a) const { return inverse_[a]; }

 private:
  friend GroupTable build_group_table(int n, GroupKind kind);
  int n_ = 0;
  GroupKind kind_ = GroupKind::kQuaternion;
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

// Derives the table from the normal form
//   (sigma^i y^j)(sigma^k y^l) = sigma^(i + (-1)^j k) y^j y^l,
// with y^2 = sigma^(2^(n-2)) (quaternion) or 1 (dihedral), then validates
// associativity, inverses and the defining relations exhaustively.
// Throws PreconditionError if n < 3 and ConsistencyError if validation fails.
GroupTable build_group_table(int n, GroupKind kind);

// Number of conjugacy classes, by brute force.
int conjugacy_class_count(const GroupTable& g);

// Structure constants of kG on the group basis.
StructureConstants group_algebra_structure_constants(const GroupTable& g,
                                                     const GFContext& field);

}  // namespace sepdef

#endif  // SEPDEF_GROUP_REFERENCE_HPP_
