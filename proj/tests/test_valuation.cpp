#include <doctest.h>

#include "cvgeo/generators.hpp"
#include "cvgeo/valuation.hpp"

#include <cmath>

using namespace cvgeo;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

Polytope unit_square() {
  return Polytope::from_points(
      {{r(1), r(1)}, {r(1), r(-1)}, {r(-1), r(1)}, {r(-1), r(-1)}});
}

Polytope box(const Rational& x0, const Rational& x1, const Rational& y0,
             const Rational& y1) {
  return Polytope::from_points({{x0, y0}, {x0, y1}, {x1, y0}, {x1, y1}});
}

CompositeSpec composite(long c0, long c1, long c2) {
  CompositeSpec s;
  s.c0 = r(c0);
  s.c1 = r(c1);
  s.c2 = r(c2);
  return s;
}

// x-coordinate of the polar moment vector: an odd, non-invariant functional.
OracleSpec polar_moment_x() {
  OracleSpec o;
  o.on_polytope = [](const Polytope& P) {
    EvalResult r;
    r.exact = moment_vector_of_polar(P)[0];
    r.value = to_double(*r.exact);
    return r;
  };
  o.label = "polar-moment-x";
  return o;
}

} // namespace

TEST_SUITE_BEGIN("valuation");

TEST_CASE("composite evaluation on polytopes is exact") {
  const EvalResult res = evaluate(ValuationSpec(composite(2, 3, 5)), unit_square());
  REQUIRE(res.exact.has_value());
  // 2 + 3 * 4 + 5 * 2: the polar of the square is the cross with area 2.
  CHECK(*res.exact == r(24));
  CHECK(res.value == doctest::Approx(24.0));
  CHECK(res.converged);
}

TEST_CASE("composite evaluation on a ball uses the closed curvature form") {
  CompositeSpec spec = composite(1, 2, 3);
  spec.phi = ConcFn::power(2.0, 2); // sqrt weight
  const double rr = 2.0;
  const EvalResult res = evaluate(ValuationSpec(spec), BodyModel(Ball{rr, 2}));
  // c0 + c1 pi r^2 + c2 pi / r^2 + 2 pi r^2 sqrt(r^-4).
  const double expected =
      1.0 + 2.0 * M_PI * rr * rr + 3.0 * M_PI / (rr * rr) + 2.0 * M_PI;
  CHECK(res.value == doctest::Approx(expected));
  CHECK(res.converged);
  CHECK_FALSE(res.exact.has_value());
}

TEST_CASE("oracles dispatch to whichever callback exists") {
  const OracleSpec oracle = polar_moment_x();
  const EvalResult via_body =
      evaluate(ValuationSpec(oracle), BodyModel(PolytopeBody{unit_square()}));
  CHECK(*via_body.exact == r(0)); // symmetric body, centered polar
  OracleSpec body_only;
  body_only.on_body = [](const BodyModel& K) {
    EvalResult r;
    r.value = body_volume(K);
    return r;
  };
  // Polytope queries reach a body-only oracle through the polytope model.
  CHECK(evaluate(ValuationSpec(body_only), unit_square()).value ==
        doctest::Approx(4.0));
  CHECK_THROWS_AS(evaluate(ValuationSpec(OracleSpec{}), unit_square()),
                  ParamOutOfDomain);
}

TEST_CASE("even/odd split reproduces parity components exactly") {
  const Polytope P = box(r(-1), r(2), r(-1, 2), r(1)); // no symmetry in x
  const auto [even, odd] = even_odd_split(ValuationSpec(composite(1, 2, 3)), 0);
  // A composite is even: even part is the whole value, odd part vanishes.
  const EvalResult base = evaluate(ValuationSpec(composite(1, 2, 3)), P);
  CHECK(*even.on_polytope(P).exact == *base.exact);
  CHECK(*odd.on_polytope(P).exact == r(0));

  const auto [meven, modd] = even_odd_split(ValuationSpec(polar_moment_x()), 0);
  const EvalResult mbase = evaluate(ValuationSpec(polar_moment_x()), P);
  CHECK(*meven.on_polytope(P).exact == r(0));
  CHECK(*modd.on_polytope(P).exact == *mbase.exact);
  CHECK(*mbase.exact != r(0));
}

TEST_CASE("inclusion-exclusion residual is exactly zero on convex splits") {
  const Polytope P = unit_square();
  const Hyperplane H({r(1), r(0)}, r(1, 4));
  const Polytope K = clip_to_halfspace(P, H, true);
  const Polytope L =
      clip_to_halfspace(P, Hyperplane({r(1), r(0)}, r(-1, 4)), false);
  const EvalResult res =
      check_valuation_identity(ValuationSpec(composite(7, -3, 2)), K, L);
  REQUIRE(res.exact.has_value());
  CHECK(*res.exact == r(0));
}

TEST_CASE("non-convex unions are rejected") {
  const Polytope K = unit_square();
  const Polytope L = box(r(-3), r(3), r(-1, 4), r(1, 4));
  CHECK_THROWS_AS(
      check_valuation_identity(ValuationSpec(composite(1, 1, 1)), K, L),
      UnionNotConvex);
}

TEST_CASE("volume-normalized invariance under shears, exact and smooth") {
  const LinearMap shear = LinearMap::shear(2, 0, 1, r(3, 2));
  const EvalResult res = check_sl_invariance(ValuationSpec(composite(1, 2, 3)),
                                             unit_square(), shear);
  CHECK(*res.exact == r(0));

  CHECK_THROWS_AS(
      check_sl_invariance(ValuationSpec(composite(1, 1, 1)), unit_square(),
                          LinearMap::scaling(2, r(2))),
      NotUnimodular);

  CompositeSpec omega_spec;
  omega_spec.phi = ConcFn::power(1.0, 2);
  const EvalResult smooth =
      check_sl_invariance(ValuationSpec(omega_spec), BodyModel(Ball{1.5, 2}),
                          {{1.0, 0.7}, {0.0, 1.0}});
  CHECK(smooth.value < 1e-9);
  CHECK_THROWS_AS(
      check_sl_invariance(ValuationSpec(omega_spec), BodyModel(Ball{1.0, 2}),
                          {{2.0, 0.0}, {0.0, 1.0}}),
      NotUnimodular);
  CHECK_THROWS_AS(
      check_sl_invariance(ValuationSpec(omega_spec),
                          BodyModel(make_regular_ngon(6)),
                          {{1.0, 0.0}, {0.0, 1.0}}),
      ParamOutOfDomain);
}

TEST_CASE("fitted homogeneity degrees match the component exponents") {
  const std::vector<double> grid = {0.5, 1.0, 2.0, 4.0};
  CHECK(homogeneity_degree(ValuationSpec(composite(0, 1, 0)), unit_square(), grid)
            .q_hat == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(homogeneity_degree(ValuationSpec(composite(0, 0, 1)), unit_square(), grid)
            .q_hat == doctest::Approx(-2.0).epsilon(1e-9));

  CompositeSpec omega_spec;
  omega_spec.phi = ConcFn::power(1.0, 2);
  const HomogeneityReport rep = homogeneity_degree(
      ValuationSpec(omega_spec), BodyModel(Ball{1.0, 2}), grid);
  CHECK(rep.q_hat == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
  CHECK(rep.max_log_residual < 1e-9);

  CHECK_THROWS_AS(homogeneity_degree(ValuationSpec(composite(0, 0, 0)),
                                     unit_square(), grid),
                  ZeroBaseline);
  CHECK_THROWS_AS(homogeneity_degree(ValuationSpec(composite(1, 1, 1)),
                                     unit_square(), {1.0, 2.0}),
                  ParamOutOfDomain);
}

TEST_CASE("decomposition recovers coefficients and the curvature weight") {
  CompositeSpec spec;
  spec.c0 = r(3, 2);
  spec.c1 = r(-2, 3);
  spec.c2 = r(5);
  spec.phi = ConcFn::power(2.0, 2); // sqrt
  const DecompositionReport rep = decompose(ValuationSpec(spec));
  CHECK(rep.c0 == spec.c0);
  CHECK(rep.c1 == spec.c1);
  CHECK(rep.c2 == spec.c2);
  CHECK_FALSE(rep.oracle_caveat);
  for (double res : rep.validation_residuals) CHECK(res == 0.0);
  REQUIRE(rep.phi_samples.size() == 3);
  for (const auto& [s, phi_hat] : rep.phi_samples) {
    CHECK(phi_hat == doctest::Approx(std::sqrt(s)).epsilon(1e-9));
  }
}

TEST_CASE("decomposing an opaque oracle carries the caveat") {
  OracleSpec oracle;
  oracle.on_polytope = [](const Polytope& P) {
    EvalResult r;
    r.exact = Rational(2) * volume(P) + Rational(1, 2);
    r.value = to_double(*r.exact);
    return r;
  };
  oracle.label = "affine-volume";
  const DecompositionReport rep = decompose(ValuationSpec(oracle));
  CHECK(rep.oracle_caveat);
  CHECK(rep.c0 == r(1, 2));
  CHECK(rep.c1 == r(2));
  CHECK(rep.c2 == r(0));
  for (double res : rep.validation_residuals) CHECK(res == 0.0);
  CHECK(rep.phi_samples.empty()); // no body evaluations available
}

TEST_CASE("semicontinuity probe accepts the polygon-to-disc sequence") {
  std::vector<BodyModel> seq;
  for (std::size_t m = 16; m <= 256; m *= 2) {
    seq.push_back(make_regular_ngon(m));
  }
  const UscReport rep =
      usc_probe(ValuationSpec(composite(0, 1, 0)), seq, BodyModel(Ball{1.0, 2}));
  CHECK(rep.bound_holds);
  CHECK(rep.limit_value == doctest::Approx(M_PI));
  CHECK(rep.values.front() < rep.values.back()); // inscribed areas grow
  CHECK(rep.converged);
}

TEST_CASE("sequences that stop converging are rejected") {
  const std::vector<BodyModel> bad = {make_regular_ngon(64),
                                      make_regular_ngon(8)};
  CHECK_THROWS_AS(usc_probe(ValuationSpec(composite(0, 1, 0)), bad,
                            BodyModel(Ball{1.0, 2})),
                  NotConverging);
  CHECK_THROWS_AS(usc_probe(ValuationSpec(composite(0, 1, 0)),
                            {BodyModel(Ball{1.0, 2})}, BodyModel(Ball{1.0, 2})),
                  ParamOutOfDomain);
}

TEST_SUITE_END();
