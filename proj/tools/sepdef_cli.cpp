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

// sepdef certify|construct: build a deformation and verify or print it.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sepdef/errors.hpp"
#include "sepdef/pipeline.hpp"

namespace {

void add_common(CLI::App* cmd, sepdef::RunConfig& cfg, std::string& group,
                std::string& out_path) {
  cmd->add_option("--n", cfg.n, "group order is 2^n (n >= 3)")->required();
  cmd->add_option("--group", group, "quaternion or dihedral")
      ->capture_default_str();
  cmd->add_option("--m", cfg.m, "exponent in c_i = 1 + alpha_i t^m (>= 2^(n-2))");
  cmd->add_option("--alpha1", cfg.alpha1, "field element, e.g. 1, g, g+1, 0x3, g^5");
  cmd->add_option("--alpha2", cfg.alpha2, "field element distinct from alpha1");
  cmd->add_option("--precision", cfg.precision,
                  "t-adic order to which identities are checked");
  cmd->add_option("--out", out_path, "write output to this file instead of stdout");
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separable deformations of quaternion and dihedral group algebras"};
  app.require_subcommand(1);

  sepdef::RunConfig cfg;
  std::string group = "quaternion";
  std::string out_path;
  auto* certify = app.add_subcommand("certify", "run every check, print a JSON certificate");
  auto* construct = app.add_subcommand("construct", "print the construction data");
  add_common(certify, cfg, group, out_path);
  add_common(construct, cfg, group, out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? sepdef::kExitOk : sepdef::kExitUsage;
  }
  try {
    cfg.kind = sepdef::parse_group_kind(group);
  } catch (const sepdef::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return sepdef::kExitUsage;
  }

  std::ostringstream buffer;
  const int code = certify->parsed()
                       ? sepdef::cmd_certify(cfg, buffer, std::cerr)
                       : sepdef::cmd_construct(cfg, buffer, std::cerr);
  if (out_path.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return sepdef::kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}
