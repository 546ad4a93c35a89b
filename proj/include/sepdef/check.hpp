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

// One verified identity of a construction.  `formula` states it in plain
// notation; `verified_to` is the t-adic order to which the residual is known
// to vanish, or empty for checks that are exact over k.

#ifndef SEPDEF_CHECK_HPP_
#define SEPDEF_CHECK_HPP_

#include <optional>
#include <string>

namespace sepdef {

struct CheckRecord {
  std::string name;
  std::string formula;
  std::optional<int> verified_to;
  bool pass = false;
};

// A residual check: passes when the residual vanishes modulo t^required.
inline CheckRecord residual_check(std::string name, std::string formula,
                                  int residual_valuation, int required) {
  return {std::move(name), std::move(formula), residual_valuation,
          residual_valuation >= required};
}

inline CheckRecord exact_check(std::string name, std::string formula,
                               bool pass) {
  return {std::move(name), std::move(formula), std::nullopt, pass};
}

}  // namespace sepdef

#endif  // SEPDEF_CHECK_HPP_
