#include <doctest.h>

#include "cvgeo/quadrature.hpp"

#include <cmath>

using namespace cvgeo;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("interval rule integrates polynomials and smooth functions") {
  const QuadResult cubic =
      integrate_interval([](double x) { return x * x * x - 2.0 * x; }, -1.0, 3.0);
  CHECK(cubic.converged);
  CHECK(cubic.value == doctest::Approx(12.0).epsilon(1e-12)); // x^4/4 - x^2

  const QuadResult trig =
      integrate_interval([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(trig.converged);
  CHECK(trig.value == doctest::Approx(2.0).epsilon(1e-10));

  const QuadResult expo =
      integrate_interval([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(expo.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("oriented and empty intervals behave like the Riemann integral") {
  const QuadResult fwd = integrate_interval([](double x) { return x; }, 0.0, 2.0);
  const QuadResult rev = integrate_interval([](double x) { return x; }, 2.0, 0.0);
  CHECK(fwd.value == doctest::Approx(2.0));
  CHECK(rev.value == doctest::Approx(-2.0));
  const QuadResult zero = integrate_interval([](double) { return 1.0; }, 1.0, 1.0);
  CHECK(zero.value == doctest::Approx(0.0));
  CHECK(zero.converged);
}

TEST_CASE("a kink converges once panels align with it") {
  const QuadResult res =
      integrate_interval([](double x) { return std::abs(x); }, -1.0, 1.0, 1e-10);
  CHECK(res.converged);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("panel budget exhaustion reports non-convergence, not an exception") {
  // A sharp spike cannot be resolved with a handful of panels.
  const QuadResult res = integrate_interval(
      [](double x) { return 1.0 / (1e-8 + x * x); }, -1.0, 1.0, 1e-14, 1e-16, 4);
  CHECK_FALSE(res.converged);
}

TEST_CASE("results accumulate across pieces") {
  QuadResult total = quad_exact(1.5);
  total += integrate_interval([](double) { return 1.0; }, 0.0, 2.0);
  CHECK(total.value == doctest::Approx(3.5));
  CHECK(total.converged);
}

TEST_CASE("sphere rule reproduces surface area and quadratic moments") {
  const QuadResult area =
      integrate_sphere3([](double, double, double) { return 1.0; });
  CHECK(area.converged);
  CHECK(area.value == doctest::Approx(4.0 * M_PI).epsilon(1e-9));

  // By symmetry each squared coordinate integrates to 4*pi/3.
  const QuadResult zz =
      integrate_sphere3([](double, double, double z) { return z * z; });
  CHECK(zz.value == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-9));
  const QuadResult xx =
      integrate_sphere3([](double x, double, double) { return x * x; });
  CHECK(xx.value == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-9));

  // Odd integrands vanish.
  const QuadResult odd =
      integrate_sphere3([](double x, double, double z) { return x * z * z; });
  CHECK(std::abs(odd.value) < 1e-12);
}

TEST_SUITE_END();
