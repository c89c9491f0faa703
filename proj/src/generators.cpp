#include "cvgeo/generators.hpp"

#include "cvgeo/errors.hpp"
#include "cvgeo/linalg.hpp"

namespace cvgeo {

Rational random_rational(Rng& rng, int max_num, int max_den) {
  return Rational(rng.next_int(-max_num, max_num), rng.next_int(1, max_den));
}

Rational random_nonzero_rational(Rng& rng, int max_num, int max_den) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    if (r != 0) return r;
  }
}

Rational random_positive_rational(Rng& rng, int max_num, int max_den) {
  return Rational(rng.next_int(1, max_num), rng.next_int(1, max_den));
}

Polytope random_origin_polytope(Rng& rng, std::size_t dim,
                                std::size_t extra_points) {
  if (dim == 0) throw DegenerateInput("random polytope needs dim >= 1");
  std::vector<RatVec> pts;
  pts.reserve(2 * dim + extra_points);
  for (std::size_t k = 0; k < dim; ++k) {
    RatVec plus(dim, Rational(0)), minus(dim, Rational(0));
    // Scales in [1/2, 3]: the cross frame keeps the origin interior.
    plus[k] = Rational(rng.next_int(1, 6), 2);
    minus[k] = -Rational(rng.next_int(1, 6), 2);
    pts.push_back(std::move(plus));
    pts.push_back(std::move(minus));
  }
  for (std::size_t i = 0; i < extra_points; ++i) {
    RatVec p(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      p[k] = Rational(rng.next_int(-6, 6), rng.next_int(1, 2));
    }
    pts.push_back(std::move(p));
  }
  return Polytope::from_points(pts);
}

LinearMap random_unimodular(Rng& rng, std::size_t dim, int shear_count) {
  if (dim < 2) throw DegenerateInput("unimodular generator needs dim >= 2");
  RatMat m = identity_mat(dim);
  for (int s = 0; s < shear_count; ++s) {
    const std::size_t i = static_cast<std::size_t>(rng.next_int(0, static_cast<int>(dim) - 1));
    std::size_t j = static_cast<std::size_t>(rng.next_int(0, static_cast<int>(dim) - 2));
    if (j >= i) ++j;
    const Rational lambda(rng.next_int(-2, 2), rng.next_int(1, 2));
    RatMat shear = identity_mat(dim);
    shear[i][j] = lambda;
    m = mat_mul(shear, m);
  }
  return LinearMap(m);
}

LinearMap random_invertible(Rng& rng, std::size_t dim) {
  for (;;) {
    RatMat m(dim, RatVec(dim));
    for (auto& row : m) {
      for (auto& v : row) v = Rational(rng.next_int(-3, 3));
    }
    if (determinant(m) != 0) return LinearMap(m);
  }
}

} // namespace cvgeo
