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

// End-to-end runs: configuration, the full certification sequence and the
// construction report.

#ifndef SEPDEF_PIPELINE_HPP_
#define SEPDEF_PIPELINE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sepdef/algebra_types.hpp"
#include "sepdef/check.hpp"
#include "sepdef/finite_field.hpp"

namespace sepdef {

inline constexpr int kMaxN = 10;

struct RunConfig {
  int n = 0;
  GroupKind kind = GroupKind::kQuaternion;
  std::optional<int> m;                // default 2^(n-2)
  std::optional<std::string> alpha1;   // default 1
  std::optional<std::string> alpha2;   // default: generator of k*
  std::optional<int> precision;        // default default_precision(n, m)
  std::uint64_t seed = 1;
};

// Check precision: every residual must vanish modulo t^N.
int default_precision(int n, int m);
// Extra t-adic digits carried internally on top of the check precision,
// covering the idempotent denominators and the Cramer division.
int precision_guard(int n, int m);

struct ResolvedConfig {
  int n = 0;
  GroupKind kind = GroupKind::kQuaternion;
  int m = 0;
  FieldPtr field;
  GFElement alpha1;
  GFElement alpha2;
  int precision = 0;          // N
  int working_precision = 0;  // N + guard
  std::uint64_t seed = 0;
};

// Validates and fills defaults.  Throws ConfigError on invalid input.
ResolvedConfig resolve(const RunConfig& cfg);

struct CertifyOptions {
  int associativity_triples = 64;
  int graded_pairs = 4;
  int eta_pairs = 16;
};

struct Certificate {
  ResolvedConfig setup;
  int z_valuation = 0;
  std::vector<CheckRecord> checks;
  std::vector<int> dimension_vector;
  int components = 0;
  int conjugacy_classes = 0;
  std::int64_t elapsed_ms = 0;

  bool passed() const;
  // Name of the first failing check, if any.
  std::optional<std::string> first_failure() const;
};

// Runs every check in order and stops at the first failure, which is then
// the last record.  Never throws for a failed check.
Certificate certify(const ResolvedConfig& setup, const CertifyOptions& options = {});

// JSON document; keys appear in a fixed order.
std::string to_json(const Certificate& cert, int indent = 2);
Certificate certificate_from_json(const std::string& text);

std::string construct_report(const ResolvedConfig& setup);

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace sepdef

#endif  // SEPDEF_PIPELINE_HPP_
