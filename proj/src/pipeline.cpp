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

#include "sepdef/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <ostream>
#include <sstream>

#include "sepdef/errors.hpp"
#include "sepdef/group_reference.hpp"
#include "sepdef/laurent.hpp"
#include "sepdef/polyring.hpp"
#include "sepdef/quotient_algebra.hpp"
#include "sepdef/skew_quotient.hpp"

namespace sepdef {

namespace {

// Raised inside certify() to stop at the first failing record.
struct StopRun {};

LaurentSeries one_plus(const FieldPtr& field, GFElement alpha, int m,
                       int prec) {
  return LaurentSeries::one(field, prec) +
         LaurentSeries::monomial(field, alpha, m, prec);
}

// pi_t has polynomial coefficients in t, so it can be rebuilt exactly at a
// higher precision whenever the Euclidean algorithm runs out of digits.
bool pi_separable(const ResolvedConfig& s) {
  int prec = s.working_precision;
  for (int attempt = 0; attempt < 6; ++attempt, prec *= 2) {
    const Poly pi = build_pi(s.n, one_plus(s.field, s.alpha1, s.m, prec),
                             one_plus(s.field, s.alpha2, s.m, prec));
    try {
      return poly_separable(pi);
    } catch (const InsufficientPrecision&) {
    }
  }
  throw InsufficientPrecision("separability of pi_t undecided at precision " +
                              std::to_string(prec));
}

int min_valuation(const std::vector<QElement>& residuals) {
  int v = INT_MAX;
  for (const auto& r : residuals) v = std::min(v, r.valuation());
  return v;
}

}  // namespace

int default_precision(int n, int m) { return 8 * m + (1 << (n - 1)) + 16; }

int precision_guard(int n, int m) { return 4 * (m + (1 << (n - 2))) + 32; }

ResolvedConfig resolve(const RunConfig& cfg) {
  if (cfg.n < 3 || cfg.n > kMaxN) {
    throw ConfigError("n must lie in [3, " + std::to_string(kMaxN) +
                      "], got " + std::to_string(cfg.n));
  }
  ResolvedConfig s;
  s.n = cfg.n;
  s.kind = cfg.kind;
  const int half = 1 << (cfg.n - 2);
  s.m = cfg.m.value_or(half);
  if (s.m < half) {
    throw ConfigError("m must be at least 2^(n-2) = " + std::to_string(half));
  }
  s.field = GFContext::make(field_degree_for(cfg.n));
  try {
    s.alpha1 = cfg.alpha1 ? parse_gf_literal(*cfg.alpha1, *s.field)
                          : s.field->one();
    s.alpha2 = cfg.alpha2 ? parse_gf_literal(*cfg.alpha2, *s.field)
                          : gf_multiplicative_generator(*s.field);
  } catch (const Error& e) {
    throw ConfigError(std::string("bad field element: ") + e.what());
  }
  if (s.alpha1.is_zero() || s.alpha2.is_zero()) {
    throw ConfigError("alpha1 and alpha2 must be nonzero");
  }
  if (s.alpha1 == s.alpha2) throw ConfigError("alpha1 and alpha2 must differ");
  s.precision = cfg.precision.value_or(default_precision(s.n, s.m));
  if (s.precision < 1) throw ConfigError("precision must be positive");
  s.working_precision = s.precision + precision_guard(s.n, s.m);
  s.seed = cfg.seed;
  return s;
}

bool Certificate::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

std::optional<std::string> Certificate::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return c.name;
  }
  return std::nullopt;
}

Certificate certify(const ResolvedConfig& s, const CertifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Certificate cert;
  cert.setup = s;
  const int N = s.precision;
  const int half = 1 << (s.n - 2);
  std::string stage = "construction";
  auto push = [&](CheckRecord rec) {
    const bool pass = rec.pass;
    cert.checks.push_back(std::move(rec));
    if (!pass) throw StopRun{};
  };

  try {
    const QuotientCtx q = QuotientCtx::build(
        {s.n, s.m, s.alpha1, s.alpha2, s.field, s.working_precision});
    const auto& field = s.field;

    int v = INT_MAX;
    for (const auto* c : {&q.c1(), &q.c2()}) {
      v = std::min(v, q.f().eval(*c).valuation());
    }
    push(residual_check("root_construction",
                        "f_t(1 + alpha_i t^m) = 0 for i = 1, 2", v, N));
    push(exact_check("b_valuation",
                     "b in (alpha1 + alpha2) t^(m - 2^(n-2)) (1 + t k[[t]])",
                     !q.b().is_zero() && q.b().valuation() == s.m - half &&
                         q.b().leading_coefficient() == s.alpha1 + s.alpha2));
    push(exact_check("d_one_unit", "d in 1 + t k[[t]]", is_one_unit(q.d())));

    stage = "pi_separable";
    push(exact_check("pi_separable", "gcd(pi_t, pi_t') = 1", pi_separable(s)));
    stage = "no_root_mod_t2";
    bool irreducible = true;
    for (GFElement a : q.labels()) {
      irreducible = irreducible && !quadratic_has_root_mod_t2(a, field);
    }
    push(exact_check("no_root_mod_t2",
                     "x^2 + a t x + 1 has no root modulo t^2 for every a",
                     irreducible));

    stage = "idempotents";
    IdempotentSet idems = crt_idempotents(q);
    const auto all = idems.all();
    std::vector<QElement> squares, products;
    QElement sum = q.zero();
    for (std::size_t i = 0; i < all.size(); ++i) {
      squares.push_back(q.mul(all[i], all[i]) - all[i]);
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        products.push_back(q.mul(all[i], all[j]));
      }
      sum = sum + all[i];
    }
    push(residual_check("idempotent_square", "e^2 = e for every idempotent",
                        min_valuation(squares), N));
    push(residual_check("idempotent_orthogonal", "e e' = 0 for e != e'",
                        min_valuation(products), N));
    push(residual_check("idempotent_partition", "sum of all e = 1",
                        (sum - q.one()).valuation(), N));
    std::vector<QElement> factors{
        q.mul(q.x_power(1), idems.e_c1) - q.c1() * idems.e_c1,
        q.mul(q.x_power(1), idems.e_c2) - q.c2() * idems.e_c2};
    for (const auto& la : idems.e_a) {
      factors.push_back(q.mul(
          q.from_poly(quadratic_factor(la.a, field, s.working_precision)),
          la.e));
    }
    push(residual_check("idempotent_factors",
                        "xbar e_ci = c_i e_ci and (xbar^2 + a t xbar + 1) e_a = 0",
                        min_valuation(factors), N));

    stage = "eta";
    const auto eta0 = q.eta_poly().specialize_t0();
    bool inverse_at_zero = static_cast<int>(eta0.size()) == q.dim();
    for (int i = 0; inverse_at_zero && i < q.dim(); ++i) {
      inverse_at_zero = eta0[i] == (i == q.dim() - 1 ? field->one() : field->zero());
    }
    push(exact_check("eta_at_zero", "eta_t(xbar) = xbar^(2^(n-1) - 1) at t = 0",
                     inverse_at_zero));
    std::vector<QElement> fixed, shifted;
    for (const auto& e : all) fixed.push_back(q.eta(e) - e);
    for (const auto& la : idems.e_a) {
      const QElement xe = q.mul(q.x_power(1), la.e);
      shifted.push_back(q.eta(xe) - xe -
                        LaurentSeries::monomial(field, la.a, 1,
                                                s.working_precision) *
                            la.e);
    }
    push(residual_check("eta_fixes_idempotents", "eta_t(e) = e",
                        min_valuation(fixed), N));
    push(residual_check("eta_on_quadratic",
                        "eta_t(xbar e_a) = (xbar + a t) e_a",
                        min_valuation(shifted), N));

    if (s.kind == GroupKind::kQuaternion) {
      stage = "d_a";
      const QElement free = quaternion_free_term(q);
      v = INT_MAX;
      for (const auto& la : idems.e_a) {
        const auto da = compute_da(la.a, q, idems, N);
        const auto other = da_by_recursion(s.n, la.a, field, s.working_precision);
        v = std::min({v, residual_valuation(da, other),
                      (q.mul(free, la.e) - da * la.e).valuation()});
      }
      push(residual_check(
          "d_a",
          "d_a != 0 by remainder and by recursion, and "
          "(xbar^(2^(n-2)) + t^(2^(n-2)-1) xbar) e_a = d_a e_a",
          v, N));
    }

    stage = "deformation";
    const DeformCtx dc = DeformCtx::build(q, std::move(idems), s.kind);
    cert.z_valuation = dc.z_valuation();
    push(exact_check("z_choice", "z (e_c1 + e_c2) = 0 at t = 0",
                     dc.ze().valuation() >= 1));
    stage = "centrality";
    for (auto& rec : centrality_check(dc, N)) push(std::move(rec));
    stage = "eta_multiplicative";
    push(eta_multiplicative_check(dc, s.seed, options.eta_pairs, N));
    stage = "associativity";
    push(associativity_check(dc, s.seed + 1, options.associativity_triples, N));
    stage = "graded_decomposition";
    push(graded_decomposition_check(dc, s.seed + 2, options.graded_pairs, N));

    stage = "specialization";
    bool gt_at_zero = dc.ze().valuation() >= 1;
    for (int i = 0; i < q.dim(); ++i) {
      const bool expect_one =
          s.kind == GroupKind::kQuaternion ? i == half : i == 0;
      gt_at_zero = gt_at_zero && dc.free_term()[i].valuation() >= 0 &&
                   dc.free_term()[i].coefficient(0) ==
                       (expect_one ? field->one() : field->zero());
    }
    push(exact_check("gt_at_zero",
                     s.kind == GroupKind::kQuaternion
                         ? "g_t(y) = y^2 + xbar^(2^(n-2)) at t = 0"
                         : "g_t(y) = y^2 + 1 at t = 0",
                     gt_at_zero));
    const GroupTable group = build_group_table(s.n, s.kind);
    push(exact_check("specialization",
                     "structure constants at t = 0 equal those of kG",
                     specialize_t0(dc) ==
                         group_algebra_structure_constants(group, *field)));

    stage = "decomposition";
    const ComponentCertificate comps = decompose_components(dc, N);
    v = INT_MAX;
    for (const auto& c : comps.quadratic) v = std::min(v, c.verified_to);
    for (const auto& c : comps.split) v = std::min(v, c.verified_to);
    push(residual_check("decomposition",
                        "g_t e_a = (y^2 + d_a) e_a and "
                        "g_t e_ci = (y^2 + z y + F(c_i)) e_ci",
                        v, N));
    cert.dimension_vector = comps.dimension_vector;
    cert.components = comps.component_count();
    cert.conjugacy_classes = conjugacy_class_count(group);
    const auto ones = std::count(comps.dimension_vector.begin(),
                                 comps.dimension_vector.end(), 1);
    push(exact_check("component_count",
                     "4 one-dimensional and 2^(n-2) - 1 two-dimensional "
                     "components, as many as conjugacy classes of G",
                     ones == 4 && cert.components == half + 3 &&
                         cert.conjugacy_classes == cert.components &&
                         comps.squared_dimension_sum() == (1 << s.n)));
  } catch (const StopRun&) {
  } catch (const CertificationError& e) {
    cert.checks.push_back(exact_check(e.check(), e.what(), false));
  } catch (const Error& e) {
    cert.checks.push_back(exact_check(stage, e.what(), false));
  }
  cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return cert;
}

std::string construct_report(const ResolvedConfig& s) {
  const QuotientCtx q = QuotientCtx::build(
      {s.n, s.m, s.alpha1, s.alpha2, s.field, s.working_precision});
  const IdempotentSet idems = crt_idempotents(q);
  const int terms = 6;
  std::ostringstream out;
  out << "group      " << to_string(s.kind) << ", order " << (1 << s.n) << "\n"
      << "field      GF(2^" << s.field->degree() << "), modulus "
      << to_hex(s.field->modulus(), s.field->degree() + 1) << "\n"
      << "m          " << s.m << "\n"
      << "alpha1     " << to_string(s.alpha1) << "\n"
      << "alpha2     " << to_string(s.alpha2) << "\n"
      << "precision  " << s.precision << " (working " << s.working_precision
      << ")\n\n";
  out << "b  = " << to_string(q.b(), terms) << "\n"
      << "d  = " << to_string(q.d(), terms) << "\n"
      << "c1 = " << to_string(q.c1(), terms) << "\n"
      << "c2 = " << to_string(q.c2(), terms) << "\n"
      << "z  = t^" << choose_z_valuation(idems) << "\n\n";
  for (GFElement a : q.labels()) {
    out << "d_a [a = " << to_string(a) << "] = "
        << to_string(da_by_remainder(s.n, a, s.field, s.working_precision),
                     terms)
        << "\n";
  }
  out << "\npi_t =\n  " << to_string(q.pi(), terms) << "\n";
  out << "\neta(x) =\n  " << to_string(q.eta_poly(), terms) << "\n";
  return out.str();
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ResolvedConfig s;
  try {
    s = resolve(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Certificate cert = certify(s);
  out << to_json(cert) << "\n";
  if (const auto failed = cert.first_failure()) {
    err << "check failed: " << *failed << " (" << cert.checks.back().formula
        << ")\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ResolvedConfig s;
  try {
    s = resolve(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    out << construct_report(s);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace sepdef
