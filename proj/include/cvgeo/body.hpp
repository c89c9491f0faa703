#ifndef CVGEO_BODY_HPP
#define CVGEO_BODY_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cvgeo/conc_fn.hpp"
#include "cvgeo/polytope.hpp"
#include "cvgeo/quadrature.hpp"

namespace cvgeo {

// Volume of the unit ball in R^n.
double unit_ball_volume(std::size_t n);

// A boundary point of a convex body with the origin interior: position x,
// outer unit normal u, generalized Gaussian curvature kappa >= 0, and the
// cone density <x, u> > 0 that weights the cone measure.
struct BoundaryPoint {
  std::vector<double> position;
  std::vector<double> normal;
  double curvature = 0.0;
  double cone_density = 0.0;
};

// Centro-affine curvature kappa_0 = kappa / <x,u>^(n+1).
double kappa_zero(const BoundaryPoint& bp, std::size_t n);

// ---------------------------------------------------------------------------
// Models

struct Ball {
  double radius = 1.0;
  std::size_t dim = 2;
};

// Solid ellipsoid E = A·B^n for a symmetric positive-definite shape matrix A,
// stored through the quadratic form M = A^{-2}: E = {x : x^T M x <= 1}.
// Keeping the form matrix makes reflection, linear images, and polarity
// matrix-inverse operations with no square roots.
class Ellipsoid {
public:
  // Body A·B^n; A must be symmetric positive definite.
  static Ellipsoid from_shape_matrix(const std::vector<std::vector<double>>& A);
  // Body {x : x^T M x <= 1}; M must be symmetric positive definite.
  static Ellipsoid from_form_matrix(const std::vector<std::vector<double>>& M);

  std::size_t dim() const { return form_.size(); }
  const std::vector<std::vector<double>>& form_matrix() const { return form_; }
  const std::vector<std::vector<double>>& inverse_form_matrix() const {
    return form_inv_;
  }
  // det(A) = det(M)^{-1/2}; equals the volume ratio to the unit ball.
  double shape_det() const { return shape_det_; }

  // Polar body (A·B^n)* = A^{-1}·B^n, i.e. form matrix M^{-1}.
  Ellipsoid polar() const;
  // Image under an invertible linear map B: form matrix B^{-T} M B^{-1}.
  Ellipsoid linear_image(const std::vector<std::vector<double>>& B) const;

  double support(const std::vector<double>& dir) const;
  // Boundary data at outer unit normal u.
  BoundaryPoint boundary_point_at_normal(const std::vector<double>& u) const;

private:
  Ellipsoid() = default;
  std::vector<std::vector<double>> form_;     // M
  std::vector<std::vector<double>> form_inv_; // M^{-1}
  double shape_det_ = 1.0;                    // det(M)^{-1/2}
};

// Pieces of a closed convex curve in the plane, traversed counterclockwise.
struct ArcPiece {
  std::array<double, 2> center{0.0, 0.0};
  double radius = 1.0;
  double from = 0.0; // start angle on the circle
  double to = 0.0;   // end angle, to > from (counterclockwise sweep)
};

struct SegmentPiece {
  std::array<double, 2> a{0.0, 0.0};
  std::array<double, 2> b{0.0, 0.0};
};

using CurvePiece = std::variant<ArcPiece, SegmentPiece>;

// A convex body in the plane bounded by circular arcs and line segments.
// Construction validates: pieces chain into a closed curve, traversal is
// counterclockwise with non-negative turning summing to 2*pi, and the origin
// is strictly interior (positive cone density everywhere).
class Piecewise2D {
public:
  explicit Piecewise2D(std::vector<CurvePiece> pieces);

  const std::vector<CurvePiece>& pieces() const { return pieces_; }
  std::size_t piece_count() const { return pieces_.size(); }

  double area() const;
  // Area of the polar body: exact dual shoelace when every piece is a
  // segment, otherwise (1/2) * integral of h(u)^{-2} over the circle.
  double polar_area() const;
  double support(const std::vector<double>& dir) const;

  // Boundary data at the polar angle theta of the position vector.
  // Corner parameters (junctions without matching tangents) are rejected.
  BoundaryPoint boundary_point_at_angle(double theta) const;

  // Integral of f against the cone measure <x,u> dH^1, piece by piece.
  QuadResult cone_measure_integral(
      const std::function<double(const BoundaryPoint&)>& f,
      double rel_tol = 1e-8, std::size_t max_panels = 4096) const;

  // Integral of phi(kappa_0) against the cone measure; segments contribute
  // zero since phi(0) = 0.
  QuadResult curvature_integral(const ConcFn& phi, double rel_tol = 1e-8,
                                std::size_t max_panels = 4096) const;

  Piecewise2D reflected(std::size_t axis) const;
  Piecewise2D scaled(double t) const;

private:
  std::vector<CurvePiece> pieces_;
  // Position-angle windows [window_lo_[i], window_hi_[i]] per piece,
  // unwrapped so the union covers one full turn.
  std::vector<double> window_lo_;
  std::vector<double> window_hi_;
  std::vector<bool> junction_smooth_; // junction_smooth_[i]: end of piece i
};

struct PolytopeBody {
  Polytope poly;
};

using BodyModel = std::variant<Ball, Ellipsoid, Piecewise2D, PolytopeBody>;

// ---------------------------------------------------------------------------
// Generic body operations

std::size_t body_dim(const BodyModel& K);
double body_volume(const BodyModel& K);
double body_polar_volume(const BodyModel& K);
double body_support(const BodyModel& K, const std::vector<double>& dir);

// Largest absolute support-function difference over a direction set.
double body_support_gap(const BodyModel& A, const BodyModel& B,
                        const std::vector<std::vector<double>>& dirs);

BodyModel reflect_body(const BodyModel& K, std::size_t axis);
BodyModel scale_body(const BodyModel& K, double t);

// Boundary data at an outer unit normal (Ball or Ellipsoid models).
BoundaryPoint boundary_point(const BodyModel& K, const std::vector<double>& u);
// Boundary data at a position polar angle (Piecewise2D model).
BoundaryPoint boundary_point(const BodyModel& K, double theta);

// Integral of f over the boundary against the cone measure <x,u> dH^{n-1}.
// Supported: Piecewise2D; Ball/Ellipsoid for n in {2, 3} via the normal
// parametrization; PolytopeBody for n = 2 (edge-wise, exact weights).
QuadResult cone_measure_integral(
    const BodyModel& K, const std::function<double(const BoundaryPoint&)>& f,
    double rel_tol = 1e-8, std::size_t max_panels = 4096);

// The curvature functional: integral of phi(kappa_0) d(cone measure).
// Closed form for balls/ellipsoids: n * kappa_n * det(A) * phi(det(A)^{-2}).
double omega_closed_form(const BodyModel& K, const ConcFn& phi);
// Forced quadrature path (Ball/Ellipsoid n in {2,3}, Piecewise2D; exact 0
// for polytopes, where the integrand vanishes identically).
QuadResult omega_quadrature(const BodyModel& K, const ConcFn& phi,
                            double rel_tol = 1e-8,
                            std::size_t max_panels = 4096);
// Best available path: structural 0 for polytopes, closed form for balls
// and ellipsoids, quadrature for piecewise curves.
QuadResult omega(const BodyModel& K, const ConcFn& phi, double rel_tol = 1e-8,
                 std::size_t max_panels = 4096);

// Classical affine surface area: omega with phi(t) = t^{1/(n+1)}.
QuadResult classical_asa(const BodyModel& K);

Ellipsoid polar_ellipsoid(const Ellipsoid& E);

// Regular m-gon inscribed in the unit circle, as a segment chain.
Piecewise2D make_regular_ngon(std::size_t m);
// Unit disc slab {lo <= x_1 <= hi} with -1 <= lo < 0 < hi <= 1; vertical
// chords appear only where the bound is interior to [-1, 1].
Piecewise2D make_disc_slab(double lo, double hi);

} // namespace cvgeo

#endif
