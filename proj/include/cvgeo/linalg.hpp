#ifndef CVGEO_LINALG_HPP
#define CVGEO_LINALG_HPP

#include "cvgeo/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cvgeo {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>; // row-major

Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rational& s);
bool is_zero(const RatVec& a);

RatVec mat_vec(const RatMat& m, const RatVec& x);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat transpose(const RatMat& m);
RatMat identity_mat(std::size_t n);

Rational determinant(RatMat m); // by value: eliminated in place
// Inverse of a square matrix; nullopt when singular.
std::optional<RatMat> inverse(const RatMat& m);
// Solves m x = rhs for square m; nullopt when singular.
std::optional<RatVec> solve(RatMat m, RatVec rhs);

// Rank of the span of the given vectors.
std::size_t rank(const std::vector<RatVec>& rows);
// Rank of {p - base : p in pts}, i.e. dimension of the affine hull minus... 0
// for a single point.
std::size_t affine_rank(const std::vector<RatVec>& pts);

// Normal of the hyperplane spanned by (pts[1]-pts[0], ..., pts[d-1]-pts[0])
// in R^d, via the generalized cross product. Zero vector when the points are
// affinely dependent.
RatVec hyperplane_normal(const std::vector<RatVec>& pts);

} // namespace cvgeo

#endif
