#include <doctest.h>

#include "cvgeo/polytope.hpp"

#include <algorithm>

using namespace cvgeo;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

RatVec v2(long x, long y) { return {r(x), r(y)}; }

Polytope unit_square() {
  return Polytope::from_points({v2(1, 1), v2(1, -1), v2(-1, 1), v2(-1, -1)});
}

Polytope box(const Rational& x0, const Rational& x1, const Rational& y0,
             const Rational& y1) {
  return Polytope::from_points(
      {{x0, y0}, {x0, y1}, {x1, y0}, {x1, y1}});
}

bool has_vertex(const Polytope& P, const RatVec& x) {
  return std::find(P.vertices().begin(), P.vertices().end(), x) !=
         P.vertices().end();
}

bool has_normal(const Polytope& P, const RatVec& n) {
  for (const auto& f : P.facets()) {
    if (f.normal == n) return true;
  }
  return false;
}

} // namespace

TEST_SUITE_BEGIN("polytope");

TEST_CASE("hull of the axis frame is the cross-polytope") {
  const Polytope P =
      Polytope::from_points({v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)});
  CHECK(P.vertices().size() == 4);
  CHECK(P.facets().size() == 4);
  CHECK(has_normal(P, v2(1, 1)));
  CHECK(has_normal(P, v2(-1, -1)));
  CHECK(volume(P) == r(2));
}

TEST_CASE("interior points are dropped") {
  const Polytope P = Polytope::from_points(
      {v2(1, 1), v2(1, -1), v2(-1, 1), v2(-1, -1), v2(0, 0)});
  CHECK(P.vertices().size() == 4);
  CHECK(P.facets().size() == 4);
  CHECK_FALSE(has_vertex(P, v2(0, 0)));
  CHECK(volume(P) == r(4));
  CHECK(P == unit_square());
}

TEST_CASE("points absorbed onto a facet edge are not vertices") {
  // (1,1) sits inside the top edge once (3,1) arrives
  const Polytope P = Polytope::from_points(
      {v2(-1, -1), v2(-1, 1), v2(1, -1), v2(1, 1), v2(3, 1), v2(3, -1)});
  CHECK(P.vertices().size() == 4);
  CHECK_FALSE(has_vertex(P, v2(1, 1)));
  CHECK(volume(P) == r(8));
}

TEST_CASE("hull failures are diagnosed") {
  CHECK_THROWS_AS(Polytope::from_points({v2(0, 0), v2(1, 1), v2(2, 2)}),
                  DegenerateInput);
  CHECK_THROWS_AS(Polytope::from_points({v2(1, 0)}), DegenerateInput);
  // origin on the boundary
  CHECK_THROWS_AS(Polytope::from_points({v2(0, -1), v2(0, 1), v2(2, 0)}),
                  OriginNotInterior);
  // origin outside
  CHECK_THROWS_AS(Polytope::from_points({v2(1, -1), v2(1, 1), v2(3, 0)}),
                  OriginNotInterior);
}

TEST_CASE("segments work in dimension one") {
  const Polytope S = Polytope::from_points({{r(-2)}, {r(3)}, {r(1)}});
  CHECK(S.vertices().size() == 2);
  CHECK(volume(S) == r(5));
  const Polytope D = polar(S);
  CHECK(D.vertices()[0][0] == r(-1, 2));
  CHECK(D.vertices()[1][0] == r(1, 3));
  CHECK(polar(D) == S);
}

TEST_CASE("cube and cross-polytope are exact polars in n=2,3,4") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::vector<Rational> ones(n, r(1));
    const Polytope cross = make_interval_hull(ones, ones);
    const Polytope cube = polar(cross);
    CHECK(cube.vertices().size() == (std::size_t{1} << n));
    CHECK(cube.facets().size() == 2 * n);
    CHECK(polar(cube) == cross);

    // volumes: cube 2^n, cross 2^n/n!
    Rational fact(1);
    for (std::size_t i = 2; i <= n; ++i) fact *= r(static_cast<long>(i));
    CHECK(volume(cube) == r(1 << n));
    CHECK(volume(cross) == r(1 << n) / fact);
  }
}

TEST_CASE("re-hulling the polar reproduces its facet structure") {
  // the dual representation swap must agree with an independent hull
  const Polytope P = Polytope::from_points(
      {v2(-1, 0), v2(2, 0), v2(0, -1), v2(0, 1), v2(1, 1)});
  const Polytope Q = polar(P);
  const Polytope R = Polytope::from_points(Q.vertices());
  CHECK(Q == R);
  CHECK(polar(Q) == P);
}

TEST_CASE("quadrilateral family matches its closed forms") {
  // base interval [-1, 2], apexes at heights 1 with vertical axis offsets 0
  const Polytope P = make_apex_quad(r(1), r(2), r(1), r(1), r(0), r(0));
  CHECK(P.vertices().size() == 4);
  CHECK(volume(P) == r(3)); // (ac+bc+ad+bd)/2
  CHECK(volume(polar(P)) == r(3)); // 1/(ac)+1/(bc)+1/(ad)+1/(bd) here

  // slanted apexes keep the formula, with a correction in the dual
  const Rational a = r(1), b = r(2), c = r(1), d = r(2), x = r(1, 4),
                 y = r(1, 4);
  const Polytope Q = make_apex_quad(a, b, c, d, x, y);
  CHECK(volume(Q) == (a * c + b * c + a * d + b * d) / 2); // = 9/2
  const Rational expected_dual = 1 / (a * c) + 1 / (b * c) + 1 / (a * d) +
                                 1 / (b * d) -
                                 (1 / (b * b) - 1 / (a * a)) * (x + y) / 2;
  CHECK(expected_dual == r(39, 16)); // hand shoelace over the exact polar
  CHECK(volume(polar(Q)) == expected_dual);
}

TEST_CASE("quadrilateral class rejects apex chords crossing outside the base") {
  CHECK_THROWS_AS(make_apex_quad(r(1), r(1), r(1), r(1), r(10), r(0)),
                  ClassViolation);
  CHECK_THROWS_AS(make_apex_quad(r(0), r(1), r(1), r(1), r(0), r(0)),
                  ParamOutOfDomain);
}

TEST_CASE("double pyramid polar is the polar prism") {
  const Polytope square = unit_square();
  const Polytope spindle = make_double_pyramid(square, r(2), r(3));
  CHECK(volume(spindle) == r(4) * (r(2) + r(3)) / 3);

  const Polytope lhs = polar(spindle);
  const Polytope rhs = product_with_interval(polar(square), r(-1, 2), r(1, 3));
  CHECK(lhs == rhs);
}

TEST_CASE("moment vector of the polar matches product integration") {
  CHECK(moment_vector_of_polar(unit_square()) ==
        RatVec{r(0), r(0)});

  // P = hull{-e1, 2e1, -e2, e2}: P* = [-1, 1/2] x [-1, 1]
  const Polytope P =
      Polytope::from_points({v2(-1, 0), v2(2, 0), v2(0, -1), v2(0, 1)});
  const RatVec m = moment_vector_of_polar(P);
  CHECK(m == RatVec{r(-3, 4), r(0)});
}

TEST_CASE("moment vector transforms contravariantly") {
  const Polytope P =
      Polytope::from_points({v2(-1, 0), v2(2, 0), v2(0, -1), v2(0, 1)});
  const LinearMap A(RatMat{{r(2), r(0)}, {r(0), r(1)}});
  const RatVec lhs = moment_vector_of_polar(apply_linear(P, A));
  const RatVec base = moment_vector_of_polar(P);
  const RatVec rhs = scale(mat_vec(A.inverse_transpose(), base),
                           1 / abs(A.det()));
  CHECK(lhs == rhs);
}

TEST_CASE("linear images act on both representations") {
  const Polytope P = unit_square();
  const LinearMap shear = LinearMap::shear(2, 0, 1, r(1));
  const Polytope Q = apply_linear(P, shear);
  CHECK(shear.is_unimodular());
  CHECK(volume(Q) == volume(P));
  CHECK(has_vertex(Q, v2(2, 1)));

  const LinearMap refl = LinearMap::reflection(2, 0);
  CHECK_FALSE(refl.is_unimodular());
  const Polytope P2 = Polytope::from_points(
      {v2(-1, 0), v2(2, 0), v2(0, -1), v2(0, 1)});
  const Polytope R = apply_linear(P2, refl);
  CHECK(has_vertex(R, v2(-2, 0)));
  CHECK(has_vertex(R, v2(1, 0)));
  CHECK(volume(R) == volume(P2));

  const LinearMap diag(RatMat{{r(2), r(0)}, {r(0), r(1, 2)}});
  CHECK(volume(apply_linear(P, diag)) == volume(P));
  CHECK_THROWS_AS(LinearMap(RatMat{{r(1), r(2)}, {r(2), r(4)}}),
                  SingularMatrix);
}

TEST_CASE("split guards the origin invariant") {
  const Polytope P = box(r(-2), r(2), r(-1), r(1));
  CHECK_THROWS_AS(split_by_hyperplane(P, Hyperplane(v2(1, 0), r(1))),
                  InvalidSplit);
  CHECK_THROWS_AS(split_by_hyperplane(unit_square(),
                                      Hyperplane(v2(1, 0), r(0))),
                  InvalidSplit);
  CHECK_THROWS_AS(split_by_hyperplane(P, Hyperplane(v2(1, 0), r(5))),
                  NoIntersection);
  CHECK_THROWS_AS(split_by_hyperplane(P, Hyperplane(v2(1, 0), r(2))),
                  NoIntersection); // touches the boundary only
}

TEST_CASE("one-sided clips build overlapping valuation pairs") {
  const Polytope P = box(r(-2), r(2), r(-1), r(1));
  const Polytope K = clip_to_halfspace(P, Hyperplane(v2(1, 0), r(1)), true);
  const Polytope L = clip_to_halfspace(P, Hyperplane(v2(1, 0), r(-1)), false);
  CHECK(K == box(r(-2), r(1), r(-1), r(1)));
  CHECK(L == box(r(-1), r(2), r(-1), r(1)));
  CHECK(volume(K) == r(6));
  CHECK(volume(L) == r(6));

  const Polytope U = convex_union(K, L);
  const Polytope I = intersect(K, L);
  CHECK(U == P);
  CHECK(I == box(r(-1), r(1), r(-1), r(1)));
  CHECK(volume(U) + volume(I) == volume(K) + volume(L)); // 8 + 4 = 6 + 6

  // polar volumes satisfy the same identity on this pair
  const Rational pv = volume(polar(U)) + volume(polar(I));
  CHECK(pv == volume(polar(K)) + volume(polar(L))); // 1 + 2 = 3/2 + 3/2
  CHECK(volume(polar(K)) == r(3, 2));
  CHECK(volume(polar(I)) == r(2));

  CHECK_THROWS_AS(clip_to_halfspace(P, Hyperplane(v2(1, 0), r(-1)), true),
                  OriginNotInterior);
}

TEST_CASE("cutting a corner keeps exact volumes") {
  const Polytope cube =
      make_interval_hull({r(1), r(1), r(1)}, {r(1), r(1), r(1)});
  const Polytope C = polar(cube); // [-1,1]^3
  const Hyperplane H({r(1), r(1), r(1)}, r(2));
  const Polytope K = clip_to_halfspace(C, H, true);
  // the removed corner is a simplex of legs 1 -> volume 1/6
  CHECK(volume(K) == r(8) - r(1, 6));
  CHECK(K.facets().size() == 7);
  CHECK(K.vertices().size() == 10);
}

TEST_CASE("intersection via duality agrees with direct clipping") {
  const Polytope P = box(r(-2), r(2), r(-1), r(1));
  const Polytope Q = Polytope::from_points(
      {v2(-1, -2), v2(-1, 2), v2(3, -2), v2(3, 2)});
  const Polytope I = intersect(P, Q);
  CHECK(I == box(r(-1), r(2), r(-1), r(1)));
}

TEST_CASE("support queries and line sections") {
  const Polytope P = box(r(-1), r(2), r(-1), r(1));
  CHECK(P.support(v2(1, 0)) == r(2));
  CHECK(P.support(v2(-1, 0)) == r(1));
  CHECK(P.support(v2(1, 1)) == r(3));
  const auto [lo, hi] = P.line_interval(v2(1, 0));
  CHECK(lo == r(-1));
  CHECK(hi == r(2));
  CHECK(P.contains(v2(0, 0)));
  CHECK(P.contains(v2(2, 1)));
  CHECK_FALSE(P.contains(v2(2, 2)));
}

TEST_CASE("edge graph of the cube") {
  const Polytope cube = polar(make_interval_hull({r(1), r(1), r(1)},
                                                 {r(1), r(1), r(1)}));
  CHECK(cube.edges().size() == 12);
  const Polytope cross = polar(cube);
  CHECK(cross.edges().size() == 12);
}

TEST_CASE("support gap monitors scaled copies") {
  const Polytope P = unit_square();
  const Polytope Q = apply_linear(P, LinearMap::scaling(2, r(11, 10)));
  const std::vector<std::vector<double>> axes = {
      {1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  CHECK(support_gap(P, Q, axes) == doctest::Approx(0.1));
  CHECK(support_gap(P, P, axes) == 0.0);
  CHECK_THROWS_AS(support_gap(P, Q, {}), EmptyDirections);
}

TEST_CASE("direction sets are deterministic and normalized") {
  for (std::size_t n : {2, 3, 4}) {
    const auto dirs = sphere_directions(n, 64);
    CHECK(dirs.size() == 64);
    for (const auto& u : dirs) {
      double norm2 = 0.0;
      for (double x : u) norm2 += x * x;
      CHECK(norm2 == doctest::Approx(1.0));
    }
    CHECK(sphere_directions(n, 64) == dirs);
  }
}

TEST_CASE("volumes are stable under relabeling and rebuilding") {
  const Polytope P = Polytope::from_points(
      {v2(-1, 0), v2(2, 0), v2(0, -1), v2(0, 1), v2(1, 1), v2(-1, -1)});
  CHECK(P.vertices().size() == 6);
  const Polytope Q = Polytope::from_points(P.vertices());
  CHECK(P == Q);
  // shoelace over the cyclic vertex order gives area 4
  CHECK(volume(P) == r(4));
}

TEST_SUITE_END();
