#include <doctest.h>

#include "cvgeo/body.hpp"
#include "cvgeo/errors.hpp"

#include <cmath>

using namespace cvgeo;

namespace {

Piecewise2D unit_disc_curve() {
  return Piecewise2D({ArcPiece{{0.0, 0.0}, 1.0, 0.0, M_PI},
                      ArcPiece{{0.0, 0.0}, 1.0, M_PI, 2.0 * M_PI}});
}

} // namespace

TEST_SUITE_BEGIN("body");

TEST_CASE("unit ball volumes across dimensions") {
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
  CHECK(unit_ball_volume(2) == doctest::Approx(M_PI));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0));
  CHECK(unit_ball_volume(4) == doctest::Approx(M_PI * M_PI / 2.0));
}

TEST_CASE("ellipsoid boundary data at a normal") {
  // Semi-axes 2 and 1/2; unit determinant.
  const Ellipsoid E = Ellipsoid::from_shape_matrix({{2.0, 0.0}, {0.0, 0.5}});
  CHECK(E.shape_det() == doctest::Approx(1.0));
  CHECK(E.support({1.0, 0.0}) == doctest::Approx(2.0));
  CHECK(E.support({0.0, 1.0}) == doctest::Approx(0.5));

  const BoundaryPoint bp = E.boundary_point_at_normal({1.0, 0.0});
  CHECK(bp.position[0] == doctest::Approx(2.0));
  CHECK(bp.position[1] == doctest::Approx(0.0));
  CHECK(bp.cone_density == doctest::Approx(2.0));
  // Plane-curve curvature at the fat end of the ellipse is a / b^2 = 8.
  CHECK(bp.curvature == doctest::Approx(8.0));
  CHECK(kappa_zero(bp, 2) == doctest::Approx(1.0));

  CHECK_THROWS_AS(E.boundary_point_at_normal({2.0, 0.0}), ParamOutOfDomain);
}

TEST_CASE("centro-affine curvature is constant on an ellipsoid") {
  const Ellipsoid E =
      Ellipsoid::from_shape_matrix({{1.5, 0.3}, {0.3, 0.9}});
  const double det_m = 1.0 / (E.shape_det() * E.shape_det());
  for (double t : {0.0, 0.7, 2.1, 4.0}) {
    const BoundaryPoint bp =
        E.boundary_point_at_normal({std::cos(t), std::sin(t)});
    CHECK(kappa_zero(bp, 2) == doctest::Approx(det_m).epsilon(1e-10));
  }
}

TEST_CASE("ellipsoid polarity and linear images act on the form matrix") {
  const Ellipsoid E = Ellipsoid::from_shape_matrix({{2.0, 0.0}, {0.0, 0.5}});
  const Ellipsoid P = E.polar();
  CHECK(P.support({1.0, 0.0}) == doctest::Approx(0.5));
  CHECK(P.support({0.0, 1.0}) == doctest::Approx(2.0));
  CHECK(P.shape_det() == doctest::Approx(1.0));

  // A shear keeps volume (and so shape_det) fixed.
  const Ellipsoid sheared = E.linear_image({{1.0, 0.8}, {0.0, 1.0}});
  CHECK(sheared.shape_det() == doctest::Approx(1.0));
  CHECK(body_volume(BodyModel(sheared)) == doctest::Approx(M_PI));

  CHECK_THROWS_AS(Ellipsoid::from_form_matrix({{1.0, 2.0}, {2.0, 1.0}}),
                  InvalidBody); // indefinite
  CHECK_THROWS_AS(Ellipsoid::from_form_matrix({{1.0, 0.5}, {0.0, 1.0}}),
                  InvalidBody); // not symmetric
}

TEST_CASE("two arcs make the unit disc") {
  const Piecewise2D disc = unit_disc_curve();
  CHECK(disc.area() == doctest::Approx(M_PI));
  CHECK(disc.polar_area() == doctest::Approx(M_PI).epsilon(1e-8));
  CHECK(disc.support({3.0, 4.0}) == doctest::Approx(5.0));

  const BoundaryPoint bp = disc.boundary_point_at_angle(1.0);
  CHECK(bp.position[0] == doctest::Approx(std::cos(1.0)));
  CHECK(bp.position[1] == doctest::Approx(std::sin(1.0)));
  CHECK(bp.curvature == doctest::Approx(1.0));
  CHECK(bp.cone_density == doctest::Approx(1.0));
}

TEST_CASE("disc slabs have the chord-cut area") {
  auto cap_area = [](double h) {
    // Area of the disc part beyond the vertical chord at x = h.
    return std::acos(h) - h * std::sqrt(1.0 - h * h);
  };
  const Piecewise2D slab = make_disc_slab(-1.0, 0.5);
  CHECK(slab.area() == doctest::Approx(M_PI - cap_area(0.5)));
  const Piecewise2D band = make_disc_slab(-0.25, 0.5);
  CHECK(band.area() ==
        doctest::Approx(M_PI - cap_area(0.5) - cap_area(0.25)));
  const Piecewise2D full = make_disc_slab(-1.0, 1.0);
  CHECK(full.area() == doctest::Approx(M_PI));
  CHECK(full.piece_count() == 2);

  CHECK_THROWS_AS(make_disc_slab(0.1, 0.5), InvalidBody);
  CHECK_THROWS_AS(make_disc_slab(-0.5, 1.5), InvalidBody);
}

TEST_CASE("regular polygons and their polars") {
  const Piecewise2D square = make_regular_ngon(4);
  CHECK(square.area() == doctest::Approx(2.0));
  CHECK(square.polar_area() == doctest::Approx(4.0));
  const Piecewise2D hex = make_regular_ngon(6);
  CHECK(hex.area() == doctest::Approx(6.0 / 2.0 * std::sin(M_PI / 3.0)));
  // Area of the circumscribed polygon polar to the inscribed one.
  CHECK(hex.polar_area() == doctest::Approx(6.0 * std::tan(M_PI / 6.0)));
  CHECK_THROWS_AS(make_regular_ngon(2), InvalidBody);
}

TEST_CASE("polygon corners reject curvature queries, edges answer them") {
  const Piecewise2D square = make_regular_ngon(4);
  CHECK_THROWS_AS(square.boundary_point_at_angle(0.0), NonSmoothPoint);
  const BoundaryPoint bp = square.boundary_point_at_angle(M_PI / 4.0);
  CHECK(bp.position[0] == doctest::Approx(0.5));
  CHECK(bp.position[1] == doctest::Approx(0.5));
  CHECK(bp.curvature == 0.0);
  CHECK(bp.cone_density == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("invalid piecewise curves are rejected with reasons") {
  // Origin outside.
  CHECK_THROWS_AS(
      Piecewise2D({ArcPiece{{5.0, 0.0}, 1.0, 0.0, 2.0 * M_PI}}), InvalidBody);
  // Clockwise traversal.
  CHECK_THROWS_AS(Piecewise2D({SegmentPiece{{1.0, 1.0}, {1.0, -1.0}},
                               SegmentPiece{{1.0, -1.0}, {-1.0, -1.0}},
                               SegmentPiece{{-1.0, -1.0}, {-1.0, 1.0}},
                               SegmentPiece{{-1.0, 1.0}, {1.0, 1.0}}}),
                  InvalidBody);
  // Chain gap.
  CHECK_THROWS_AS(Piecewise2D({SegmentPiece{{1.0, -1.0}, {1.0, 1.0}},
                               SegmentPiece{{1.0, 1.0}, {-1.0, 1.0}},
                               SegmentPiece{{-1.0, 1.0}, {-1.0, -1.0}},
                               SegmentPiece{{-1.0, -1.0}, {0.9, -1.0}}}),
                  InvalidBody);
  // Arc swept the wrong way.
  CHECK_THROWS_AS(
      Piecewise2D({ArcPiece{{0.0, 0.0}, 1.0, 2.0 * M_PI, 0.0}}), InvalidBody);
}

TEST_CASE("reflection mirrors a slab and scaling is quadratic on area") {
  const Piecewise2D slab = make_disc_slab(-1.0, 0.5);
  const Piecewise2D mirrored = slab.reflected(0);
  const Piecewise2D expected = make_disc_slab(-0.5, 1.0);
  CHECK(mirrored.area() == doctest::Approx(expected.area()));
  for (double t : {0.3, 1.2, 2.5, 4.4}) {
    const std::vector<double> u = {std::cos(t), std::sin(t)};
    CHECK(mirrored.support(u) == doctest::Approx(expected.support(u)));
  }
  const Piecewise2D larger = slab.scaled(3.0);
  CHECK(larger.area() == doctest::Approx(9.0 * slab.area()));
}

TEST_CASE("cone measure has total mass n times the volume") {
  auto one = [](const BoundaryPoint&) { return 1.0; };

  const Polytope square = Polytope::from_points(
      {{Rational(1), Rational(1)},
       {Rational(1), Rational(-1)},
       {Rational(-1), Rational(1)},
       {Rational(-1), Rational(-1)}});
  const QuadResult sq = cone_measure_integral(BodyModel(PolytopeBody{square}), one);
  CHECK(sq.converged);
  CHECK(sq.value == doctest::Approx(8.0)); // 2 * area = 2 * 4

  const QuadResult disc =
      cone_measure_integral(BodyModel(Piecewise2D(unit_disc_curve())), one);
  CHECK(disc.value == doctest::Approx(2.0 * M_PI).epsilon(1e-8));

  const QuadResult ball3 = cone_measure_integral(BodyModel(Ball{2.0, 3}), one);
  CHECK(ball3.converged);
  CHECK(ball3.value == doctest::Approx(32.0 * M_PI).epsilon(1e-7)); // 3 * V

  const Ellipsoid E = Ellipsoid::from_shape_matrix({{2.0, 0.0}, {0.0, 0.5}});
  const QuadResult ell = cone_measure_integral(BodyModel(E), one);
  CHECK(ell.value == doctest::Approx(2.0 * M_PI).epsilon(1e-8));

  CHECK_THROWS_AS(cone_measure_integral(BodyModel(Ball{1.0, 4}), one),
                  ParamOutOfDomain);
}

TEST_CASE("curvature functional: closed form agrees with quadrature") {
  const ConcFn phi = ConcFn::power(1.0, 2);
  const Ellipsoid E = Ellipsoid::from_shape_matrix({{2.0, 0.3}, {0.3, 0.7}});
  const double closed = omega_closed_form(BodyModel(E), phi);
  const QuadResult quad = omega_quadrature(BodyModel(E), phi);
  CHECK(quad.converged);
  CHECK(quad.value == doctest::Approx(closed).epsilon(1e-7));

  const ConcFn phi3 = ConcFn::power(1.0, 3);
  const Ellipsoid E3 = Ellipsoid::from_shape_matrix(
      {{1.5, 0.0, 0.0}, {0.0, 1.0, 0.2}, {0.0, 0.2, 0.8}});
  const double closed3 = omega_closed_form(BodyModel(E3), phi3);
  const QuadResult quad3 = omega_quadrature(BodyModel(E3), phi3);
  CHECK(quad3.converged);
  CHECK(quad3.value == doctest::Approx(closed3).epsilon(1e-6));
}

TEST_CASE("curvature functional vanishes on polytopes and polygon chains") {
  const ConcFn phi = ConcFn::power(1.0, 2);
  const Polytope square = Polytope::from_points(
      {{Rational(1), Rational(1)},
       {Rational(1), Rational(-1)},
       {Rational(-1), Rational(1)},
       {Rational(-1), Rational(-1)}});
  const QuadResult flat = omega(BodyModel(PolytopeBody{square}), phi);
  CHECK(flat.value == 0.0);
  CHECK(flat.converged);
  const QuadResult ngon = omega(BodyModel(make_regular_ngon(64)), phi);
  CHECK(ngon.value == 0.0);
}

TEST_CASE("disc curvature functional matches the ball closed form") {
  const ConcFn phi = ConcFn::power(1.0, 2);
  const QuadResult quad = omega(BodyModel(unit_disc_curve()), phi);
  CHECK(quad.converged);
  CHECK(quad.value == doctest::Approx(2.0 * M_PI).epsilon(1e-8));
  // Affine surface area of a disc of radius r is 2 pi r^(2/3).
  const QuadResult asa = classical_asa(BodyModel(Ball{8.0, 2}));
  CHECK(asa.value == doctest::Approx(2.0 * M_PI * 4.0));
}

TEST_CASE("generic body helpers dispatch across models") {
  const BodyModel ngon = make_regular_ngon(512);
  const BodyModel disc = Ball{1.0, 2};
  const auto dirs = sphere_directions(2, 32);
  const double gap = body_support_gap(ngon, disc, dirs);
  CHECK(gap > 0.0);
  CHECK(gap < 1e-4);

  CHECK(body_dim(disc) == 2);
  CHECK(body_volume(disc) == doctest::Approx(M_PI));
  CHECK(body_polar_volume(BodyModel(Ball{2.0, 2})) ==
        doctest::Approx(M_PI / 4.0));

  const BodyModel shrunk = scale_body(ngon, 0.5);
  CHECK(body_volume(shrunk) == doctest::Approx(0.25 * body_volume(ngon)));
  const BodyModel mirrored = reflect_body(disc, 1);
  CHECK(body_volume(mirrored) == doctest::Approx(M_PI));
}

TEST_SUITE_END();
