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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SEPDEF_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (const std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) {
    out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Cli, CertifyQuaternionN4) {
  const auto r = run("certify --n 4 --group quaternion");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["dimension_vector"], nlohmann::json({1, 1, 1, 1, 2, 2, 2}));
  EXPECT_TRUE(doc["pass"].get<bool>());
  for (const auto& c : doc["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c;
}

TEST(Cli, CertifyDihedralN3) {
  const auto r = run("certify --n 3 --group dihedral");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["dimension_vector"], nlohmann::json({1, 1, 1, 1, 2}));
  EXPECT_EQ(doc["kind"], "dihedral");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("certify --n 2").exit_code, 2);
  EXPECT_EQ(run("certify --n 4 --m 3").exit_code, 2);
  EXPECT_EQ(run("certify --n 4 --alpha1 g --alpha2 0x2").exit_code, 2);
  EXPECT_EQ(run("certify --n 4 --alpha1 0").exit_code, 2);
  EXPECT_EQ(run("certify --n 4 --group cyclic").exit_code, 2);
  EXPECT_EQ(run("certify").exit_code, 2);
  EXPECT_EQ(run("frobnicate --n 3").exit_code, 2);
}

TEST(Cli, DeterministicUpToElapsedTime) {
  auto strip = [](std::string s) {
    auto doc = nlohmann::json::parse(s);
    doc.erase("elapsed_ms");
    return doc.dump();
  };
  const auto a = run("certify --n 4 --seed 99");
  const auto b = run("certify --n 4 --seed 99");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(strip(a.out), strip(b.out));
  EXPECT_EQ(nlohmann::json::parse(a.out)["seed"], 99);
}

TEST(Cli, OutFlagWritesFile) {
  const std::string path = ::testing::TempDir() + "/sepdef_cert.json";
  const auto r = run("certify --n 3 --out " + path);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["n"], 3);
}

TEST(Cli, ConstructPrintsDa) {
  const auto r3 = run("construct --n 3");
  ASSERT_EQ(r3.exit_code, 0);
  EXPECT_NE(r3.out.find("d_a [a = 1] = 1 + O(t^"), std::string::npos);

  // Over F_4 with g^2 = g + 1: d_a = a^2 t^2 + 1.
  const auto r4 = run("construct --n 4");
  ASSERT_EQ(r4.exit_code, 0);
  EXPECT_NE(r4.out.find("d_a [a = 1] = 1 + t^2 + O("), std::string::npos);
  EXPECT_NE(r4.out.find("d_a [a = g] = 1 + (g+1)*t^2 + O("), std::string::npos);
  EXPECT_NE(r4.out.find("d_a [a = g+1] = 1 + g*t^2 + O("), std::string::npos);
  // b has valuation m - 2^(n-2) = 0 and leading coefficient 1 + g.
  EXPECT_NE(r4.out.find("b  = g+1 + "), std::string::npos);

  const auto r4m = run("construct --n 4 --m 6");
  EXPECT_NE(r4m.out.find("b  = (g+1)*t^2 + "), std::string::npos);
}

}  // namespace
