// Command-line front end: evaluate valuations on convex bodies, run the
// verification suites, and fit decompositions. Reports are deterministic
// JSON (no timestamps): identical inputs give byte-identical output.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "cvgeo/body.hpp"
#include "cvgeo/errors.hpp"
#include "cvgeo/feq.hpp"
#include "cvgeo/generators.hpp"
#include "cvgeo/io.hpp"
#include "cvgeo/polytope.hpp"
#include "cvgeo/valuation.hpp"

namespace {

using cvgeo::io::json;
using namespace cvgeo;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t thread_budget(std::size_t cases) {
  std::size_t threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("CV_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) threads = std::min<std::size_t>(threads, parsed);
  }
  return std::max<std::size_t>(1, std::min(threads, cases));
}

// Runs fn(0..count-1) on a small pool and aggregates results by index, so
// the report is independent of scheduling.
template <typename Fn>
std::vector<json> run_cases_ordered(std::size_t count, Fn&& fn) {
  std::vector<json> results(count);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = fn(i);
      } catch (const std::exception& e) {
        results[i] = json{{"case", i}, {"pass", false}, {"error", e.what()}};
      }
    }
  };
  const std::size_t threads = thread_budget(count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

bool all_pass(const std::vector<json>& cases) {
  for (const json& c : cases) {
    if (!c.value("pass", false)) return false;
  }
  return true;
}

CompositeSpec random_composite(Rng& rng) {
  CompositeSpec spec;
  spec.c0 = random_rational(rng, 4, 3);
  spec.c1 = random_rational(rng, 4, 3);
  spec.c2 = random_rational(rng, 4, 3);
  return spec;
}

// ---------------------------------------------------------------------------
// Verification suites

json suite_polar_involution(std::uint64_t seed, std::size_t cases) {
  auto run = [seed](std::size_t i) {
    Rng rng(seed + i);
    const std::size_t dim = 2 + i % 3;
    const Polytope P = random_origin_polytope(rng, dim, 3);
    const Polytope Q = polar(polar(P));
    bool ok = (Q == P);
    // The polar's own data must be a genuine hull: rebuilding from its
    // vertices reproduces it.
    const Polytope Pstar = polar(P);
    ok = ok && (Polytope::from_points(Pstar.vertices()) == Pstar);
    // Dual route for bipyramids: polar(bipyramid over B) equals the prism
    // over polar(B).
    const Polytope base = random_origin_polytope(rng, dim - 1, 2);
    const Rational a = random_positive_rational(rng, 3, 2);
    const Rational b = random_positive_rational(rng, 3, 2);
    const Polytope lhs = polar(make_double_pyramid(base, a, b));
    const Polytope rhs =
        product_with_interval(polar(base), -Rational(1) / a, Rational(1) / b);
    ok = ok && (lhs == rhs);
    return json{{"case", i}, {"dim", dim}, {"pass", ok}};
  };
  std::vector<json> results = run_cases_ordered(cases, run);
  return json{{"suite", "polar-involution"},
              {"cases", results},
              {"passed", all_pass(results)}};
}

json suite_valuation_identity(std::uint64_t seed, std::size_t cases,
                              double tol) {
  auto run = [seed](std::size_t i) {
    Rng rng(seed + i);
    const std::size_t dim = 2 + i % 2;
    const Polytope P = random_origin_polytope(rng, dim, 3);
    RatVec e(dim, Rational(0));
    e[i % dim] = Rational(1);
    const Rational beta(1, 4), alpha(-1, 4);
    const Polytope K = clip_to_halfspace(P, Hyperplane(e, beta), true);
    const Polytope L = clip_to_halfspace(P, Hyperplane(e, alpha), false);
    ValuationSpec spec = random_composite(rng);
    const EvalResult res = check_valuation_identity(spec, K, L);
    const bool ok = res.exact && *res.exact == 0;
    return json{{"case", i},
                {"dim", dim},
                {"residual", to_string(res.exact ? *res.exact : Rational(0))},
                {"pass", ok}};
  };
  std::vector<json> results = run_cases_ordered(cases, run);

  // Curvature functional on disc caps: union/intersection by construction.
  const ConcFn phi1 = ConcFn::power(1.0, 2);
  CompositeSpec omega_spec;
  omega_spec.phi = phi1;
  const std::vector<double> caps = {0.5, 0.25, 0.6, 0.7, 0.9};
  json cap_results = json::array();
  bool caps_pass = true;
  for (double a : caps) {
    const BodyModel K = make_disc_slab(-1.0, a);
    const BodyModel L = make_disc_slab(-a, 1.0);
    const BodyModel U = make_disc_slab(-1.0, 1.0);
    const BodyModel I = make_disc_slab(-a, a);
    const EvalResult res =
        check_valuation_identity(ValuationSpec(omega_spec), K, L, U, I);
    const bool ok = res.converged && res.value < tol;
    caps_pass = caps_pass && ok;
    cap_results.push_back(
        json{{"a", a}, {"residual", res.value}, {"pass", ok}});
  }
  return json{{"suite", "valuation-identity"},
              {"cases", results},
              {"disc_caps", cap_results},
              {"passed", all_pass(results) && caps_pass}};
}

json suite_sl_invariance(std::uint64_t seed, std::size_t cases, double tol) {
  auto run = [seed](std::size_t i) {
    Rng rng(seed + i);
    const std::size_t dim = 2 + i % 2;
    const Polytope P = random_origin_polytope(rng, dim, 2);
    const LinearMap A = random_unimodular(rng, dim);
    CompositeSpec spec = random_composite(rng);
    const EvalResult res = check_sl_invariance(ValuationSpec(spec), P, A);
    const bool ok = res.exact && *res.exact == 0;
    return json{{"case", i}, {"dim", dim}, {"pass", ok}};
  };
  std::vector<json> results = run_cases_ordered(cases, run);

  // Smooth side: the curvature functional on a shear image of the disc.
  CompositeSpec omega_spec;
  omega_spec.phi = ConcFn::power(1.0, 2);
  const EvalResult smooth = check_sl_invariance(
      ValuationSpec(omega_spec), BodyModel(Ball{1.0, 2}),
      {{1.0, 1.0}, {0.0, 1.0}});
  const bool smooth_ok = smooth.value < tol;

  // Reflections are rejected.
  bool rejects_reflection = false;
  try {
    RatMat refl = identity_mat(2);
    refl[0][0] = Rational(-1);
    check_sl_invariance(ValuationSpec(CompositeSpec{}),
                        make_interval_hull({Rational(1), Rational(1)},
                                           {Rational(1), Rational(1)}),
                        LinearMap(refl));
  } catch (const NotUnimodular&) {
    rejects_reflection = true;
  }
  return json{{"suite", "sl-invariance"},
              {"cases", results},
              {"smooth_residual", smooth.value},
              {"rejects_reflection", rejects_reflection},
              {"passed", all_pass(results) && smooth_ok && rejects_reflection}};
}

json suite_moment_contravariance(std::uint64_t seed, std::size_t cases) {
  auto run = [seed](std::size_t i) {
    Rng rng(seed + i);
    const Polytope P = random_origin_polytope(rng, 2, 3);
    const LinearMap A = random_invertible(rng, 2);
    const RatVec lhs = moment_vector_of_polar(apply_linear(P, A));
    RatVec rhs = mat_vec(A.inverse_transpose(), moment_vector_of_polar(P));
    Rational det = A.det();
    if (det < 0) det = -det;
    for (Rational& v : rhs) v /= det;
    const bool ok = (lhs == rhs);
    return json{{"case", i}, {"pass", ok}};
  };
  std::vector<json> results = run_cases_ordered(cases, run);
  return json{{"suite", "moment-contravariance"},
              {"cases", results},
              {"passed", all_pass(results)}};
}

json suite_homogeneity(std::uint64_t seed, std::size_t cases, double tol) {
  (void)seed;
  (void)cases;
  const std::vector<double> t_grid = {0.5, 1.0, 1.5, 2.0, 3.0};
  json rows = json::array();
  bool passed = true;

  const Polytope square =
      make_interval_hull({Rational(1), Rational(1)}, {Rational(1), Rational(1)});
  struct PolyCase {
    const char* name;
    CompositeSpec spec;
    double expected;
  };
  std::vector<PolyCase> poly_cases;
  poly_cases.push_back({"volume", {}, 2.0});
  poly_cases.back().spec.c1 = Rational(1);
  poly_cases.push_back({"polar-volume", {}, -2.0});
  poly_cases.back().spec.c2 = Rational(1);
  for (const auto& pc : poly_cases) {
    const HomogeneityReport rep =
        homogeneity_degree(ValuationSpec(pc.spec), square, t_grid);
    const bool ok = std::abs(rep.q_hat - pc.expected) < 1e-9;
    passed = passed && ok;
    rows.push_back(json{{"component", pc.name},
                        {"q_hat", rep.q_hat},
                        {"expected", pc.expected},
                        {"pass", ok}});
  }

  for (double p : {1.0, 2.0}) {
    CompositeSpec spec;
    spec.phi = ConcFn::power(p, 2);
    const double expected = 2.0 * (2.0 - p) / (2.0 + p);
    const HomogeneityReport rep = homogeneity_degree(
        ValuationSpec(spec), BodyModel(Ball{1.0, 2}), t_grid);
    const bool ok = std::abs(rep.q_hat - expected) < std::max(tol, 1e-4);
    passed = passed && ok;
    rows.push_back(json{{"component", "curvature-p=" + std::to_string(p)},
                        {"q_hat", rep.q_hat},
                        {"expected", expected},
                        {"pass", ok}});
  }
  return json{{"suite", "homogeneity"}, {"rows", rows}, {"passed", passed}};
}

json suite_usc_probe(std::uint64_t seed, std::size_t cases, double tol) {
  (void)seed;
  (void)cases;
  (void)tol;
  std::vector<BodyModel> seq;
  // Start at 16 so the tail half sits at m >= 128, where the polar-volume
  // excess of inscribed m-gons (~ pi^3 / (3 m^2)) is inside the slack.
  for (std::size_t m = 16; m <= 512; m *= 2) {
    seq.push_back(make_regular_ngon(m));
  }
  const BodyModel disc = Ball{1.0, 2};

  json rows = json::array();
  bool passed = true;
  auto probe = [&](const char* name, const ValuationSpec& spec) {
    const UscReport rep = usc_probe(spec, seq, disc);
    passed = passed && rep.bound_holds;
    rows.push_back(json{{"component", name},
                        {"values", rep.values},
                        {"limit", rep.limit_value},
                        {"gaps", rep.gaps},
                        {"bound_holds", rep.bound_holds}});
  };
  CompositeSpec omega_spec;
  omega_spec.phi = ConcFn::power(1.0, 2);
  probe("curvature", ValuationSpec(omega_spec));
  CompositeSpec vol;
  vol.c1 = Rational(1);
  probe("volume", ValuationSpec(vol));
  CompositeSpec pvol;
  pvol.c2 = Rational(1);
  probe("polar-volume", ValuationSpec(pvol));
  return json{{"suite", "usc-probe"}, {"rows", rows}, {"passed", passed}};
}

json suite_q2_description(std::uint64_t seed, std::size_t cases) {
  auto run = [seed](std::size_t i) {
    Rng rng(seed + i);
    const CompositeSpec spec = random_composite(rng);
    const std::vector<Rational> grid = {Rational(1, 2), Rational(1),
                                        Rational(2)};
    const Q2Report rep = extract_F_on_Q2(ValuationSpec(spec), grid);
    const bool ok = rep.max_residual == 0;
    return json{{"case", i},
                {"residual", to_string(rep.max_residual)},
                {"pass", ok}};
  };
  std::vector<json> results = run_cases_ordered(cases, run);

  // Component fingerprints: F = s/2, 1/s, 1/4 for area, polar area, Euler.
  bool bases_ok = true;
  {
    CompositeSpec area;
    area.c1 = Rational(1);
    const auto F = extract_F_on_Q2(ValuationSpec(area),
                                   {Rational(1, 2), Rational(1), Rational(2)})
                       .F;
    for (const auto& [s, v] : F.points()) bases_ok = bases_ok && (v == s / 2);
    CompositeSpec pvol;
    pvol.c2 = Rational(1);
    const auto Fp = extract_F_on_Q2(ValuationSpec(pvol),
                                    {Rational(1, 2), Rational(1), Rational(2)})
                        .F;
    for (const auto& [s, v] : Fp.points()) {
      bases_ok = bases_ok && (v == Rational(1) / s);
    }
    CompositeSpec euler;
    euler.c0 = Rational(1);
    const auto Fe = extract_F_on_Q2(ValuationSpec(euler),
                                    {Rational(1, 2), Rational(1), Rational(2)})
                        .F;
    for (const auto& [s, v] : Fe.points()) {
      bases_ok = bases_ok && (v == Rational(1, 4));
    }
  }
  return json{{"suite", "q2-description"},
              {"cases", results},
              {"component_fingerprints", bases_ok},
              {"passed", all_pass(results) && bases_ok}};
}

json suite_r2_description(std::uint64_t seed, std::size_t cases) {
  auto run = [seed](std::size_t i) {
    Rng rng(seed + i);
    const CompositeSpec spec = random_composite(rng);
    const R2Report rep = fit_R2_descriptor(ValuationSpec(spec));
    // Expected mapping: F(r) = c1'/r + c2' + c3' r with c1' = c2 (polar
    // coefficient), c2' = c0/4, c3' = c1/2, and slant part k = -c2/2.
    const bool ok = rep.c1 == spec.c2 && rep.c2 == spec.c0 / Rational(4) &&
                    rep.c3 == spec.c1 / Rational(2) &&
                    rep.k == -spec.c2 / Rational(2) &&
                    rep.max_fit_residual == 0 &&
                    rep.max_family_residual == 0 && rep.c1_matches_minus_2k;
    return json{{"case", i}, {"pass", ok}};
  };
  std::vector<json> results = run_cases_ordered(cases, run);
  return json{{"suite", "r2-description"},
              {"cases", results},
              {"passed", all_pass(results)}};
}

json suite_one_dim(std::uint64_t seed, std::size_t cases) {
  auto run = [seed](std::size_t i) {
    Rng rng(seed + i);
    const CompositeSpec spec = random_composite(rng);
    const IntervalValuation mu = interval_valuation(ValuationSpec(spec));
    std::vector<std::pair<Rational, Rational>> pairs;
    for (int t = 0; t < 6; ++t) {
      pairs.emplace_back(random_positive_rational(rng, 4, 2),
                         random_positive_rational(rng, 4, 2));
    }
    const Rational residual = one_dim_split_residual(mu, pairs);
    return json{{"case", i},
                {"residual", to_string(residual)},
                {"pass", residual == 0}};
  };
  std::vector<json> results = run_cases_ordered(cases, run);

  // A product rule is not of split form and must be flagged.
  const IntervalValuation product = [](const Rational& a, const Rational& b) {
    return a * b;
  };
  const Rational adv = one_dim_split_residual(
      product, {{Rational(2), Rational(3)}, {Rational(1, 2), Rational(2)}});
  const bool adversarial_detected = adv != 0;
  return json{{"suite", "one-dim"},
              {"cases", results},
              {"adversarial_detected", adversarial_detected},
              {"passed", all_pass(results) && adversarial_detected}};
}

json suite_cauchy(std::uint64_t seed, std::size_t cases) {
  auto run = [seed](std::size_t i) {
    Rng rng(seed + i);
    const Rational c = random_rational(rng, 5, 3);
    std::vector<std::pair<Rational, Rational>> pts;
    for (const Rational& x : default_additive_grid()) {
      pts.emplace_back(x, c * x);
    }
    const CauchyReport rep =
        cauchy_residual(GridFunction1D::from_points(std::move(pts)));
    const bool ok = rep.slope == c && rep.max_additivity_residual == 0 &&
                    rep.max_linear_residual == 0;
    return json{{"case", i},
                {"slope", to_string(rep.slope)},
                {"triples", rep.triple_count},
                {"pass", ok}};
  };
  std::vector<json> results = run_cases_ordered(cases, run);

  // Quadratic corruption must surface as an additivity residual.
  std::vector<std::pair<Rational, Rational>> bad;
  for (const Rational& x : default_additive_grid()) bad.emplace_back(x, x * x);
  const CauchyReport rep =
      cauchy_residual(GridFunction1D::from_points(std::move(bad)));
  const bool adversarial_detected = rep.max_additivity_residual != 0;
  return json{{"suite", "cauchy"},
              {"cases", results},
              {"adversarial_detected", adversarial_detected},
              {"passed", all_pass(results) && adversarial_detected}};
}

json run_suite(const std::string& name, std::uint64_t seed, std::size_t cases,
               double tol) {
  if (name == "polar-involution") return suite_polar_involution(seed, cases);
  if (name == "valuation-identity") {
    return suite_valuation_identity(seed, cases, tol);
  }
  if (name == "sl-invariance") return suite_sl_invariance(seed, cases, tol);
  if (name == "moment-contravariance") {
    return suite_moment_contravariance(seed, cases);
  }
  if (name == "homogeneity") return suite_homogeneity(seed, cases, tol);
  if (name == "usc-probe") return suite_usc_probe(seed, cases, tol);
  if (name == "q2-description") return suite_q2_description(seed, cases);
  if (name == "r2-description") return suite_r2_description(seed, cases);
  if (name == "one-dim") return suite_one_dim(seed, cases);
  if (name == "cauchy") return suite_cauchy(seed, cases);
  throw UnknownSuite("no such suite: " + name);
}

const std::vector<std::string> kAllSuites = {
    "polar-involution", "valuation-identity",    "sl-invariance",
    "moment-contravariance", "homogeneity",      "usc-probe",
    "q2-description",   "r2-description",        "one-dim",
    "cauchy"};

// ---------------------------------------------------------------------------

void emit(const json& report, const std::string& out_path,
          const std::string& format) {
  std::string text;
  if (format == "json") {
    text = report.dump(2) + "\n";
  } else {
    std::ostringstream os;
    if (report.contains("suites")) {
      for (const json& s : report.at("suites")) {
        os << "suite " << s.at("suite").get<std::string>() << ": "
           << (s.at("passed").get<bool>() ? "PASS" : "FAIL") << "\n";
      }
      os << (report.at("passed").get<bool>() ? "ALL PASS" : "FAILURES") << "\n";
    } else {
      os << report.dump(2) << "\n";
    }
    text = os.str();
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << text;
  }
}

int cmd_compute(const std::string& spec_arg, const std::string& body_path,
                const std::string& polytope_path, const std::string& phi_desc,
                const std::string& out_path, const std::string& format) {
  json report;
  report["command"] = "compute";
  if (body_path.empty() == polytope_path.empty()) {
    throw std::runtime_error("pass exactly one of --body or --polytope");
  }

  std::size_t dim = 2;
  std::optional<Polytope> poly;
  std::optional<BodyModel> body;
  if (!polytope_path.empty()) {
    poly = io::polytope_from_json(json::parse(read_file(polytope_path)));
    dim = poly->dim();
  } else {
    body = io::body_from_json(json::parse(read_file(body_path)));
    dim = body_dim(*body);
  }

  if (spec_arg == "mahler") {
    // Volume product V(K) * V(K*).
    if (poly) {
      const Rational v = volume(*poly) * volume(polar(*poly));
      report["exact"] = to_string(v);
      report["value"] = to_double(v);
    } else {
      report["exact"] = nullptr;
      report["value"] = body_volume(*body) * body_polar_volume(*body);
    }
    report["converged"] = true;
  } else {
    CompositeSpec spec =
        io::composite_from_json(json::parse(read_file(spec_arg)), dim);
    if (!phi_desc.empty()) {
      spec.phi = io::conc_fn_from_descriptor(phi_desc, dim);
    }
    const EvalResult res = poly ? evaluate(ValuationSpec(spec), *poly)
                                : evaluate(ValuationSpec(spec), *body);
    report["exact"] = res.exact ? json(to_string(*res.exact)) : json(nullptr);
    report["value"] = res.value;
    report["converged"] = res.converged;
  }
  emit(report, out_path, format);
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t cases,
               double tol, const std::string& out_path,
               const std::string& format) {
  json report;
  report["command"] = "verify";
  report["seed"] = seed;
  report["cases"] = cases;
  report["tol"] = tol;
  json suites = json::array();
  bool passed = true;
  if (suite == "all") {
    for (const std::string& name : kAllSuites) {
      json s = run_suite(name, seed, cases, tol);
      passed = passed && s.at("passed").get<bool>();
      suites.push_back(std::move(s));
    }
  } else {
    json s = run_suite(suite, seed, cases, tol);
    passed = passed && s.at("passed").get<bool>();
    suites.push_back(std::move(s));
  }
  report["suites"] = std::move(suites);
  report["passed"] = passed;
  emit(report, out_path, format);
  return passed ? 0 : 1;
}

int cmd_decompose(const std::string& spec_path, std::size_t dim,
                  const std::string& out_path, const std::string& format) {
  const CompositeSpec spec =
      io::composite_from_json(json::parse(read_file(spec_path)), dim);
  const DecompositionReport rep = decompose(ValuationSpec(spec), dim);
  json report;
  report["command"] = "decompose";
  report["dim"] = dim;
  report["c0"] = to_string(rep.c0);
  report["c1"] = to_string(rep.c1);
  report["c2"] = to_string(rep.c2);
  report["validation_residuals"] = rep.validation_residuals;
  json samples = json::array();
  for (const auto& [s, v] : rep.phi_samples) {
    samples.push_back(json{{"s", s}, {"phi_hat", v}});
  }
  report["phi_samples"] = std::move(samples);
  report["oracle_caveat"] = rep.oracle_caveat;
  emit(report, out_path, format);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational toolkit for SL(n)-invariant valuations on "
               "convex bodies"};
  app.require_subcommand(1);

  std::string spec_arg, body_path, polytope_path, phi_desc, out_path;
  std::string format = "json";
  std::string suite = "all";
  std::uint64_t seed = 20260819;
  std::size_t cases = 25;
  std::size_t dim = 2;
  double tol = 1e-6;

  CLI::App* compute = app.add_subcommand(
      "compute", "evaluate a valuation on one body or polytope");
  compute->add_option("--spec", spec_arg,
                      "valuation JSON file, or 'mahler' for the volume product")
      ->required();
  compute->add_option("--body", body_path, "body JSON file");
  compute->add_option("--polytope", polytope_path, "polytope JSON file");
  compute->add_option("--phi", phi_desc,
                      "weight descriptor, e.g. power:p=1 or affine:alpha=1,beta=2");
  compute->add_option("--out", out_path, "write the report here");
  compute->add_option("--format", format, "json or text");

  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "suite name or 'all' (polar-involution, "
                     "valuation-identity, sl-invariance, "
                     "moment-contravariance, homogeneity, usc-probe, "
                     "q2-description, r2-description, one-dim, cauchy)");
  verify->add_option("--seed", seed, "deterministic case seed");
  verify->add_option("--cases", cases, "random cases per suite");
  verify->add_option("--tol", tol, "tolerance for quadrature comparisons");
  verify->add_option("--out", out_path, "write the report here");
  verify->add_option("--format", format, "json or text");

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "fit (c0, c1, c2) and weight samples for a valuation");
  decompose_cmd->add_option("--spec", spec_arg, "valuation JSON file")
      ->required();
  decompose_cmd->add_option("--dim", dim, "ambient dimension");
  decompose_cmd->add_option("--out", out_path, "write the report here");
  decompose_cmd->add_option("--format", format, "json or text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      return cmd_compute(spec_arg, body_path, polytope_path, phi_desc,
                         out_path, format);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, seed, cases, tol, out_path, format);
    }
    if (decompose_cmd->parsed()) {
      return cmd_decompose(spec_arg, dim, out_path, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
