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

#include <nlohmann/json.hpp>

#include "sepdef/errors.hpp"
#include "sepdef/pipeline.hpp"

namespace sepdef {

using Json = nlohmann::ordered_json;

std::string to_json(const Certificate& cert, int indent) {
  const ResolvedConfig& s = cert.setup;
  const int bits = s.field->degree();
  Json checks = Json::array();
  for (const auto& c : cert.checks) {
    checks.push_back({{"name", c.name},
                      {"identity", c.formula},
                      {"verified_to_precision",
                       c.verified_to ? Json(*c.verified_to) : Json(nullptr)},
                      {"pass", c.pass}});
  }
  Json doc = {
      {"n", s.n},
      {"kind", std::string(to_string(s.kind))},
      {"field", {{"s", bits}, {"modulus", to_hex(s.field->modulus(), bits + 1)}}},
      {"m", s.m},
      {"alpha1", to_hex(s.alpha1, *s.field)},
      {"alpha2", to_hex(s.alpha2, *s.field)},
      {"z_valuation", cert.z_valuation},
      {"precision", s.precision},
      {"working_precision", s.working_precision},
      {"seed", s.seed},
      {"checks", std::move(checks)},
      {"dimension_vector", cert.dimension_vector},
      {"components", cert.components},
      {"conjugacy_classes", cert.conjugacy_classes},
      {"pass", cert.passed()},
      {"elapsed_ms", cert.elapsed_ms},
  };
  return doc.dump(indent);
}

Certificate certificate_from_json(const std::string& text) {
  try {
    const Json doc = Json::parse(text);
    Certificate cert;
    ResolvedConfig& s = cert.setup;
    s.n = doc.at("n").get<int>();
    s.kind = parse_group_kind(doc.at("kind").get<std::string>());
    const int bits = doc.at("field").at("s").get<int>();
    s.field = std::make_shared<const GFContext>(
        bits, bits_from_hex(doc.at("field").at("modulus").get<std::string>()));
    s.m = doc.at("m").get<int>();
    s.alpha1 = gf_from_hex(doc.at("alpha1").get<std::string>(), *s.field);
    s.alpha2 = gf_from_hex(doc.at("alpha2").get<std::string>(), *s.field);
    s.precision = doc.at("precision").get<int>();
    s.working_precision = doc.at("working_precision").get<int>();
    s.seed = doc.at("seed").get<std::uint64_t>();
    cert.z_valuation = doc.at("z_valuation").get<int>();
    for (const auto& c : doc.at("checks")) {
      CheckRecord rec;
      rec.name = c.at("name").get<std::string>();
      rec.formula = c.at("identity").get<std::string>();
      if (!c.at("verified_to_precision").is_null()) {
        rec.verified_to = c.at("verified_to_precision").get<int>();
      }
      rec.pass = c.at("pass").get<bool>();
      cert.checks.push_back(std::move(rec));
    }
    cert.dimension_vector = doc.at("dimension_vector").get<std::vector<int>>();
    cert.components = doc.at("components").get<int>();
    cert.conjugacy_classes = doc.at("conjugacy_classes").get<int>();
    cert.elapsed_ms = doc.at("elapsed_ms").get<std::int64_t>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace sepdef
