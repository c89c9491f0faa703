#ifndef CVGEO_POLYTOPE_HPP
#define CVGEO_POLYTOPE_HPP

#include "cvgeo/errors.hpp"
#include "cvgeo/linalg.hpp"
#include "cvgeo/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cvgeo {

// Hyperplane {x : <normal, x> = offset}, normal != 0.
struct Hyperplane {
  RatVec normal;
  Rational offset;
  Hyperplane(RatVec n, Rational off);
};

// Invertible linear map with cached determinant.
class LinearMap {
 public:
  explicit LinearMap(RatMat m); // throws SingularMatrix
  const RatMat& matrix() const { return mat_; }
  const Rational& det() const { return det_; }
  bool is_unimodular() const { return unimodular_; } // det == 1
  std::size_t dim() const { return mat_.size(); }
  LinearMap inverse() const;
  RatMat inverse_transpose() const;
  RatVec apply(const RatVec& x) const { return mat_vec(mat_, x); }

  // e_axis -> -e_axis, identity elsewhere (coordinate reflection).
  static LinearMap reflection(std::size_t n, std::size_t axis);
  static LinearMap scaling(std::size_t n, const Rational& t);
  static LinearMap shear(std::size_t n, std::size_t row, std::size_t col,
                         const Rational& lambda);

 private:
  RatMat mat_;
  Rational det_;
  bool unimodular_;
};

// Convex polytope in R^n with the origin strictly interior. Dual exact
// representation: minimal vertex list plus minimal facet list of outward
// normals a_i with <a_i, x> <= 1. Immutable after construction.
class Polytope {
 public:
  struct Facet {
    RatVec normal;                       // <normal, x> <= 1
    std::vector<uint32_t> vertex_ids;    // sorted, complete incidence
  };

  // Exact hull of the points; throws DegenerateInput / OriginNotInterior.
  static Polytope from_points(const std::vector<RatVec>& points);
  // Builds from trusted dual data (used by polar, products, transforms);
  // validates all representation invariants.
  static Polytope from_parts(std::size_t dim, std::vector<RatVec> vertices,
                             std::vector<Facet> facets);

  std::size_t dim() const { return dim_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const RatVec& x) const;
  Rational support(const RatVec& dir) const;           // exact h_P
  double support(const std::vector<double>& dir) const;

  // [lo, hi] with P cap {t*u} = {t u : lo <= t <= hi}; u != 0.
  std::pair<Rational, Rational> line_interval(const RatVec& u) const;

  // Vertex pairs forming 1-faces.
  std::vector<std::pair<uint32_t, uint32_t>> edges() const;

  friend bool operator==(const Polytope& a, const Polytope& b);

 private:
  Polytope() = default;
  void validate() const;

  std::size_t dim_ = 0;
  std::vector<RatVec> vertices_; // lex-sorted
  std::vector<Facet> facets_;
};

bool operator==(const Polytope& a, const Polytope& b);
inline bool operator!=(const Polytope& a, const Polytope& b) { return !(a == b); }

// --- core operations ---------------------------------------------------

Polytope convex_hull(const std::vector<RatVec>& points);

// Representation swap: vertices of P become facet normals of P* and vice
// versa. Exact; an involution.
Polytope polar(const Polytope& P);

// Exact n-volume (origin fan over facets, lexicographic facet fans).
Rational volume(const Polytope& P);

// Integral of the identity over P*, exact.
RatVec moment_vector_of_polar(const Polytope& P);

// Cuts P along H into (P cap H^-, P cap H^+). Both pieces must keep the
// origin strictly interior — a single genuine cut never satisfies that, so
// this op acts as an executable statement of the domain constraint; build
// overlapping pairs with clip_to_halfspace instead.
std::pair<Polytope, Polytope> split_by_hyperplane(const Polytope& P,
                                                  const Hyperplane& H);

// The single piece P cap {<normal,x> <= offset} (keep_lower) or
// P cap {<normal,x> >= offset}; the kept piece must contain the origin
// strictly. Throws NoIntersection if H misses int(P).
Polytope clip_to_halfspace(const Polytope& P, const Hyperplane& H,
                           bool keep_lower);

Polytope apply_linear(const Polytope& P, const LinearMap& A);

// P cap Q via polarity: (P cap Q)* = conv(P* u Q*).
Polytope intersect(const Polytope& P, const Polytope& Q);

// conv(P u Q).
Polytope convex_union(const Polytope& P, const Polytope& Q);

// --- constructors for the special polytope families ---------------------

// Hull of the axis intervals [-neg[k] e_k, pos[k] e_k]; all scales > 0.
Polytope make_interval_hull(const std::vector<Rational>& neg,
                            const std::vector<Rational>& pos);

// Quadrilateral [-a e1, b e1, c (x,-1), d (y,1)] whose x-axis section must
// equal [-a e1, b e1]; throws ClassViolation otherwise.
Polytope make_apex_quad(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d, const Rational& x, const Rational& y);

// [base, -a e_n, b e_n] for base in R^{n-1}; a, b > 0. Goes through the
// general hull.
Polytope make_double_pyramid(const Polytope& base, const Rational& a,
                             const Rational& b);

// base x [lo e_n, hi e_n] with lo < 0 < hi, built directly from the dual
// data of base (no hull).
Polytope product_with_interval(const Polytope& base, const Rational& lo,
                               const Rational& hi);

// --- probes --------------------------------------------------------------

// max_u |h_P(u) - h_Q(u)| over the sampled directions (convergence monitor,
// not a Hausdorff bound). Throws EmptyDirections.
double support_gap(const Polytope& P, const Polytope& Q,
                   const std::vector<std::vector<double>>& directions);

// Deterministic unit directions: uniform angles (n=2), Fibonacci sphere
// (n=3), golden-ratio lattice pushed through a fixed hash (n>=4).
std::vector<std::vector<double>> sphere_directions(std::size_t dim,
                                                   std::size_t count);

} // namespace cvgeo

#endif
