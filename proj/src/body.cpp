#include "cvgeo/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>

#include "cvgeo/errors.hpp"

namespace cvgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

using DMat = std::vector<std::vector<double>>;
using DVec = std::vector<double>;

double ddot(const DVec& a, const DVec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dnorm(const DVec& a) { return std::sqrt(ddot(a, a)); }

DVec dmat_vec(const DMat& A, const DVec& x) {
  DVec out(A.size(), 0.0);
  for (std::size_t i = 0; i < A.size(); ++i) out[i] = ddot(A[i], x);
  return out;
}

DMat dmat_mul(const DMat& A, const DMat& B) {
  const std::size_t n = A.size();
  DMat out(n, DVec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += A[i][k] * B[k][j];
  return out;
}

DMat dmat_identity(std::size_t n) {
  DMat out(n, DVec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1.0;
  return out;
}

// Gauss-Jordan with partial pivoting; returns false on (near-)singularity.
bool dmat_inverse(DMat a, DMat& inv, double& det) {
  const std::size_t n = a.size();
  inv = dmat_identity(n);
  det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-14) return false;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
      det = -det;
    }
    const double p = a[col][col];
    det *= p;
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return true;
}

void require_spd(const DMat& A, const char* what) {
  const std::size_t n = A.size();
  if (n == 0) throw InvalidBody(std::string(what) + ": empty matrix");
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (A[i].size() != n) throw InvalidBody(std::string(what) + ": not square");
    for (double v : A[i]) scale = std::max(scale, std::abs(v));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(A[i][j] - A[j][i]) > 1e-9 * std::max(1.0, scale))
        throw InvalidBody(std::string(what) + ": matrix not symmetric");
  // Cholesky factorization succeeds exactly for positive-definite input.
  DMat L(n, DVec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = A[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
      if (i == j) {
        if (s <= 0.0)
          throw InvalidBody(std::string(what) + ": matrix not positive definite");
        L[i][i] = std::sqrt(s);
      } else {
        L[i][j] = s / L[j][j];
      }
    }
  }
}

std::array<double, 2> arc_at(const ArcPiece& p, double psi) {
  return {p.center[0] + p.radius * std::cos(psi),
          p.center[1] + p.radius * std::sin(psi)};
}

std::array<double, 2> piece_start(const CurvePiece& piece) {
  if (const auto* arc = std::get_if<ArcPiece>(&piece)) return arc_at(*arc, arc->from);
  const auto& seg = std::get<SegmentPiece>(piece);
  return seg.a;
}

std::array<double, 2> piece_end(const CurvePiece& piece) {
  if (const auto* arc = std::get_if<ArcPiece>(&piece)) return arc_at(*arc, arc->to);
  const auto& seg = std::get<SegmentPiece>(piece);
  return seg.b;
}

std::array<double, 2> normalized2(std::array<double, 2> v, const char* what) {
  const double len = std::hypot(v[0], v[1]);
  if (len < 1e-12) throw InvalidBody(std::string(what) + ": degenerate piece");
  return {v[0] / len, v[1] / len};
}

std::array<double, 2> piece_start_tangent(const CurvePiece& piece) {
  if (const auto* arc = std::get_if<ArcPiece>(&piece))
    return {-std::sin(arc->from), std::cos(arc->from)};
  const auto& seg = std::get<SegmentPiece>(piece);
  return normalized2({seg.b[0] - seg.a[0], seg.b[1] - seg.a[1]}, "segment");
}

std::array<double, 2> piece_end_tangent(const CurvePiece& piece) {
  if (const auto* arc = std::get_if<ArcPiece>(&piece))
    return {-std::sin(arc->to), std::cos(arc->to)};
  return piece_start_tangent(piece);
}

double cross2(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

double dot2(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return a[0] * b[0] + a[1] * b[1];
}

// Signed angle swept going from direction a to direction b, in (-pi, pi].
double signed_sweep(const std::array<double, 2>& a,
                    const std::array<double, 2>& b) {
  return std::atan2(cross2(a, b), dot2(a, b));
}

// Position-angle sweep of a piece as seen from the origin, accumulated over
// fine sub-samples so each increment stays well inside (-pi, pi).
double piece_position_sweep(const CurvePiece& piece) {
  constexpr int kSamples = 64;
  std::array<double, 2> prev = piece_start(piece);
  double acc = 0.0;
  for (int s = 1; s <= kSamples; ++s) {
    const double t = static_cast<double>(s) / kSamples;
    std::array<double, 2> cur;
    if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
      cur = arc_at(*arc, arc->from + t * (arc->to - arc->from));
    } else {
      const auto& seg = std::get<SegmentPiece>(piece);
      cur = {seg.a[0] + t * (seg.b[0] - seg.a[0]),
             seg.a[1] + t * (seg.b[1] - seg.a[1])};
    }
    acc += signed_sweep(prev, cur);
    prev = cur;
  }
  return acc;
}

// Outward unit normal of a segment traversed counterclockwise.
std::array<double, 2> segment_outer_normal(const SegmentPiece& seg) {
  const auto dir = normalized2({seg.b[0] - seg.a[0], seg.b[1] - seg.a[1]},
                               "segment");
  return {dir[1], -dir[0]};
}

BoundaryPoint segment_boundary_point(const SegmentPiece& seg, double s) {
  const auto u = segment_outer_normal(seg);
  BoundaryPoint bp;
  bp.position = {seg.a[0] + s * (seg.b[0] - seg.a[0]),
                 seg.a[1] + s * (seg.b[1] - seg.a[1])};
  bp.normal = {u[0], u[1]};
  bp.curvature = 0.0;
  bp.cone_density = seg.a[0] * u[0] + seg.a[1] * u[1];
  return bp;
}

BoundaryPoint arc_boundary_point(const ArcPiece& arc, double psi) {
  const double c = std::cos(psi), s = std::sin(psi);
  BoundaryPoint bp;
  bp.position = {arc.center[0] + arc.radius * c, arc.center[1] + arc.radius * s};
  bp.normal = {c, s};
  bp.curvature = 1.0 / arc.radius;
  bp.cone_density = arc.center[0] * c + arc.center[1] * s + arc.radius;
  return bp;
}

double piece_support(const CurvePiece& piece, const std::array<double, 2>& u) {
  if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
    const double ang = std::atan2(u[1], u[0]);
    // Is the normal direction attained inside the arc's angular range?
    double rel = std::fmod(ang - arc->from, 2.0 * kPi);
    if (rel < 0.0) rel += 2.0 * kPi;
    if (rel <= arc->to - arc->from + 1e-12) {
      return arc->center[0] * u[0] + arc->center[1] * u[1] + arc->radius;
    }
    const auto p = arc_at(*arc, arc->from);
    const auto q = arc_at(*arc, arc->to);
    return std::max(dot2(p, u), dot2(q, u));
  }
  const auto& seg = std::get<SegmentPiece>(piece);
  return std::max(dot2(seg.a, u), dot2(seg.b, u));
}

} // namespace

double unit_ball_volume(std::size_t n) {
  return std::pow(kPi, static_cast<double>(n) / 2.0) /
         std::tgamma(static_cast<double>(n) / 2.0 + 1.0);
}

double kappa_zero(const BoundaryPoint& bp, std::size_t n) {
  return bp.curvature /
         std::pow(bp.cone_density, static_cast<double>(n) + 1.0);
}

// ---------------------------------------------------------------------------
// Ellipsoid

Ellipsoid Ellipsoid::from_shape_matrix(const DMat& A) {
  require_spd(A, "ellipsoid shape matrix");
  Ellipsoid e;
  const DMat A2 = dmat_mul(A, A);
  double detA2 = 0.0;
  DMat M;
  if (!dmat_inverse(A2, M, detA2) || detA2 <= 0.0) {
    throw InvalidBody("ellipsoid shape matrix is numerically singular");
  }
  e.form_ = M;
  e.form_inv_ = A2;
  e.shape_det_ = std::sqrt(detA2);
  return e;
}

Ellipsoid Ellipsoid::from_form_matrix(const DMat& M) {
  require_spd(M, "ellipsoid form matrix");
  Ellipsoid e;
  double detM = 0.0;
  DMat Minv;
  if (!dmat_inverse(M, Minv, detM) || detM <= 0.0) {
    throw InvalidBody("ellipsoid form matrix is numerically singular");
  }
  e.form_ = M;
  e.form_inv_ = Minv;
  e.shape_det_ = 1.0 / std::sqrt(detM);
  return e;
}

Ellipsoid Ellipsoid::polar() const { return from_form_matrix(form_inv_); }

Ellipsoid Ellipsoid::linear_image(const DMat& B) const {
  const std::size_t n = dim();
  if (B.size() != n) throw InvalidBody("linear image: dimension mismatch");
  DMat Binv;
  double detB = 0.0;
  if (!dmat_inverse(B, Binv, detB)) {
    throw SingularMatrix("linear image of ellipsoid needs invertible matrix");
  }
  // {x : x^T M x <= 1} maps to form B^{-T} M B^{-1}.
  DMat BinvT(n, DVec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) BinvT[i][j] = Binv[j][i];
  DMat M2 = dmat_mul(dmat_mul(BinvT, form_), Binv);
  // Symmetrize away roundoff before revalidation.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (M2[i][j] + M2[j][i]);
      M2[i][j] = avg;
      M2[j][i] = avg;
    }
  return from_form_matrix(M2);
}

double Ellipsoid::support(const DVec& dir) const {
  if (dir.size() != dim()) throw ParamOutOfDomain("support: dimension mismatch");
  return std::sqrt(std::max(0.0, ddot(dir, dmat_vec(form_inv_, dir))));
}

BoundaryPoint Ellipsoid::boundary_point_at_normal(const DVec& u) const {
  const std::size_t n = dim();
  if (u.size() != n) throw ParamOutOfDomain("normal has wrong dimension");
  const double len = dnorm(u);
  if (std::abs(len - 1.0) > 1e-9) {
    throw ParamOutOfDomain("normal parameter must be a unit vector");
  }
  DVec unit(n);
  for (std::size_t i = 0; i < n; ++i) unit[i] = u[i] / len;
  const DVec w = dmat_vec(form_inv_, unit);
  const double q = ddot(unit, w); // u^T M^{-1} u > 0
  const double root = std::sqrt(q);
  BoundaryPoint bp;
  bp.position.resize(n);
  for (std::size_t i = 0; i < n; ++i) bp.position[i] = w[i] / root;
  bp.normal = unit;
  bp.cone_density = root;
  const double det_m = 1.0 / (shape_det_ * shape_det_);
  bp.curvature = det_m * std::pow(q, (static_cast<double>(n) + 1.0) / 2.0);
  return bp;
}

// ---------------------------------------------------------------------------
// Piecewise2D

Piecewise2D::Piecewise2D(std::vector<CurvePiece> pieces)
    : pieces_(std::move(pieces)) {
  const std::size_t n = pieces_.size();
  if (n == 0) throw InvalidBody("piecewise curve needs at least one piece");

  for (const auto& piece : pieces_) {
    if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
      if (!(arc->radius > 0.0)) throw InvalidBody("arc radius must be positive");
      if (!(arc->to > arc->from)) {
        throw InvalidBody("arc must sweep counterclockwise (to > from)");
      }
      if (arc->to - arc->from > 2.0 * kPi + 1e-9) {
        throw InvalidBody("arc sweeps more than a full turn");
      }
    } else {
      const auto& seg = std::get<SegmentPiece>(piece);
      if (std::hypot(seg.b[0] - seg.a[0], seg.b[1] - seg.a[1]) < 1e-12) {
        throw InvalidBody("segment piece is degenerate");
      }
    }
  }

  double scale = 1.0;
  for (const auto& piece : pieces_) {
    const auto p = piece_start(piece);
    scale = std::max({scale, std::abs(p[0]), std::abs(p[1])});
  }

  double total_turning = 0.0;
  junction_smooth_.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const auto e = piece_end(pieces_[i]);
    const auto s = piece_start(pieces_[j]);
    if (std::hypot(e[0] - s[0], e[1] - s[1]) > 1e-9 * scale) {
      throw InvalidBody("boundary pieces do not chain into a closed curve");
    }
    const double turn =
        signed_sweep(piece_end_tangent(pieces_[i]), piece_start_tangent(pieces_[j]));
    if (turn < -1e-9) {
      throw InvalidBody("clockwise turn at a junction: curve is not convex");
    }
    junction_smooth_[i] = std::abs(turn) < 1e-9;
    total_turning += std::max(turn, 0.0);
    if (const auto* arc = std::get_if<ArcPiece>(&pieces_[i])) {
      total_turning += arc->to - arc->from;
    }
  }
  if (std::abs(total_turning - 2.0 * kPi) > 1e-6) {
    throw InvalidBody("total turning differs from one full turn");
  }

  // Origin strictly interior: sample cone density on every piece.
  for (const auto& piece : pieces_) {
    if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
      for (int k = 0; k <= 4; ++k) {
        const double psi = arc->from + (arc->to - arc->from) * k / 4.0;
        if (arc_boundary_point(*arc, psi).cone_density <= 1e-12) {
          throw InvalidBody("origin is not strictly interior to the curve");
        }
      }
    } else {
      const auto& seg = std::get<SegmentPiece>(piece);
      if (segment_boundary_point(seg, 0.0).cone_density <= 1e-12) {
        throw InvalidBody("origin is not strictly interior to the curve");
      }
    }
  }

  // Position-angle windows, unwrapped from the first piece's start point.
  window_lo_.resize(n);
  window_hi_.resize(n);
  const auto first = piece_start(pieces_[0]);
  double w = std::atan2(first[1], first[0]);
  for (std::size_t i = 0; i < n; ++i) {
    window_lo_[i] = w;
    const double sweep = piece_position_sweep(pieces_[i]);
    if (sweep < -1e-9) {
      throw InvalidBody("position angle decreases along a piece");
    }
    w += std::max(sweep, 0.0);
    window_hi_[i] = w;
  }
  if (std::abs((w - window_lo_[0]) - 2.0 * kPi) > 1e-6) {
    throw InvalidBody("curve does not wind exactly once around the origin");
  }
}

double Piecewise2D::area() const {
  double acc = 0.0;
  for (const auto& piece : pieces_) {
    if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
      const double d = arc->to - arc->from;
      acc += 0.5 * (arc->radius * arc->radius * d +
                    arc->radius * (arc->center[0] *
                                       (std::sin(arc->to) - std::sin(arc->from)) -
                                   arc->center[1] *
                                       (std::cos(arc->to) - std::cos(arc->from))));
    } else {
      const auto& seg = std::get<SegmentPiece>(piece);
      acc += 0.5 * cross2(seg.a, seg.b);
    }
  }
  return acc;
}

double Piecewise2D::polar_area() const {
  bool all_segments = true;
  for (const auto& piece : pieces_) {
    if (!std::holds_alternative<SegmentPiece>(piece)) {
      all_segments = false;
      break;
    }
  }
  if (all_segments) {
    // Dual shoelace: each edge with outer normal u and support h contributes
    // the polar vertex u/h, in matching counterclockwise order.
    std::vector<std::array<double, 2>> polar_vertices;
    polar_vertices.reserve(pieces_.size());
    for (const auto& piece : pieces_) {
      const auto& seg = std::get<SegmentPiece>(piece);
      const auto u = segment_outer_normal(seg);
      const double h = dot2(seg.a, u);
      polar_vertices.push_back({u[0] / h, u[1] / h});
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < polar_vertices.size(); ++i) {
      acc += cross2(polar_vertices[i],
                    polar_vertices[(i + 1) % polar_vertices.size()]);
    }
    return 0.5 * acc;
  }
  auto h_inv_sq = [this](double theta) {
    const double h = support({std::cos(theta), std::sin(theta)});
    return 1.0 / (h * h);
  };
  return 0.5 * integrate_interval(h_inv_sq, 0.0, 2.0 * kPi).value;
}

double Piecewise2D::support(const DVec& dir) const {
  if (dir.size() != 2) throw ParamOutOfDomain("support: dimension mismatch");
  const double len = std::hypot(dir[0], dir[1]);
  if (len < 1e-15) return 0.0;
  const std::array<double, 2> u{dir[0] / len, dir[1] / len};
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& piece : pieces_) best = std::max(best, piece_support(piece, u));
  return best * len;
}

BoundaryPoint Piecewise2D::boundary_point_at_angle(double theta) const {
  const std::size_t n = pieces_.size();
  const double base = window_lo_[0];
  double t = std::fmod(theta - base, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  t += base;

  std::size_t idx = n; // piece whose window contains t
  for (std::size_t i = 0; i < n; ++i) {
    if (t >= window_lo_[i] - 1e-12 && t <= window_hi_[i] + 1e-12) {
      idx = i;
      break;
    }
  }
  if (idx == n) throw ParamOutOfDomain("angle outside parameter coverage");

  const double junction_tol = 1e-9;
  if (std::abs(t - window_lo_[idx]) < junction_tol) {
    const std::size_t prev = (idx + n - 1) % n;
    if (!junction_smooth_[prev]) {
      throw NonSmoothPoint("corner point has no curvature data");
    }
  } else if (std::abs(t - window_hi_[idx]) < junction_tol) {
    if (!junction_smooth_[idx]) {
      throw NonSmoothPoint("corner point has no curvature data");
    }
  }

  const std::array<double, 2> d{std::cos(t), std::sin(t)};
  if (const auto* arc = std::get_if<ArcPiece>(&pieces_[idx])) {
    const double b = dot2(d, arc->center);
    const double c = dot2(arc->center, arc->center) - arc->radius * arc->radius;
    const double disc = std::max(0.0, b * b - c);
    const double s = b + std::sqrt(disc); // far intersection of the ray
    const std::array<double, 2> x{s * d[0], s * d[1]};
    const double psi = std::atan2(x[1] - arc->center[1], x[0] - arc->center[0]);
    return arc_boundary_point(*arc, psi);
  }
  const auto& seg = std::get<SegmentPiece>(pieces_[idx]);
  const double denom = cross2({seg.b[0] - seg.a[0], seg.b[1] - seg.a[1]}, d);
  if (std::abs(denom) < 1e-15) {
    throw ParamOutOfDomain("ray is parallel to the boundary segment");
  }
  double s = cross2(d, seg.a) / denom;
  s = std::clamp(s, 0.0, 1.0);
  return segment_boundary_point(seg, s);
}

QuadResult Piecewise2D::cone_measure_integral(
    const std::function<double(const BoundaryPoint&)>& f, double rel_tol,
    std::size_t max_panels) const {
  QuadResult total = quad_exact(0.0);
  for (const auto& piece : pieces_) {
    if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
      auto integrand = [&](double psi) {
        const BoundaryPoint bp = arc_boundary_point(*arc, psi);
        return f(bp) * bp.cone_density * arc->radius;
      };
      total += integrate_interval(integrand, arc->from, arc->to, rel_tol, 1e-12,
                                  max_panels);
    } else {
      const auto& seg = std::get<SegmentPiece>(piece);
      const double len = std::hypot(seg.b[0] - seg.a[0], seg.b[1] - seg.a[1]);
      auto integrand = [&](double s) {
        const BoundaryPoint bp = segment_boundary_point(seg, s);
        return f(bp) * bp.cone_density * len;
      };
      total += integrate_interval(integrand, 0.0, 1.0, rel_tol, 1e-12, max_panels);
    }
  }
  return total;
}

QuadResult Piecewise2D::curvature_integral(const ConcFn& phi, double rel_tol,
                                           std::size_t max_panels) const {
  // Segments carry zero curvature, so phi(kappa_0) = phi(0) = 0 there.
  QuadResult total = quad_exact(0.0);
  for (const auto& piece : pieces_) {
    const auto* arc = std::get_if<ArcPiece>(&piece);
    if (arc == nullptr) continue;
    auto integrand = [&](double psi) {
      const BoundaryPoint bp = arc_boundary_point(*arc, psi);
      return phi(kappa_zero(bp, 2)) * bp.cone_density * arc->radius;
    };
    total += integrate_interval(integrand, arc->from, arc->to, rel_tol, 1e-12,
                                max_panels);
  }
  return total;
}

Piecewise2D Piecewise2D::reflected(std::size_t axis) const {
  if (axis >= 2) throw ParamOutOfDomain("reflection axis out of range");
  auto mirror = [axis](std::array<double, 2> p) {
    p[axis] = -p[axis];
    return p;
  };
  std::vector<CurvePiece> out;
  out.reserve(pieces_.size());
  // Mirroring reverses orientation; reverse the piece order (and each
  // segment's endpoints) to restore counterclockwise traversal.
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    if (const auto* arc = std::get_if<ArcPiece>(&*it)) {
      ArcPiece m;
      m.center = mirror(arc->center);
      m.radius = arc->radius;
      if (axis == 0) {
        m.from = kPi - arc->to;
        m.to = kPi - arc->from;
      } else {
        m.from = -arc->to;
        m.to = -arc->from;
      }
      out.push_back(m);
    } else {
      const auto& seg = std::get<SegmentPiece>(*it);
      out.push_back(SegmentPiece{mirror(seg.b), mirror(seg.a)});
    }
  }
  return Piecewise2D(std::move(out));
}

Piecewise2D Piecewise2D::scaled(double t) const {
  if (!(t > 0.0)) throw ParamOutOfDomain("scale factor must be positive");
  std::vector<CurvePiece> out;
  out.reserve(pieces_.size());
  for (const auto& piece : pieces_) {
    if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
      out.push_back(ArcPiece{{arc->center[0] * t, arc->center[1] * t},
                             arc->radius * t, arc->from, arc->to});
    } else {
      const auto& seg = std::get<SegmentPiece>(piece);
      out.push_back(SegmentPiece{{seg.a[0] * t, seg.a[1] * t},
                                 {seg.b[0] * t, seg.b[1] * t}});
    }
  }
  return Piecewise2D(std::move(out));
}

// ---------------------------------------------------------------------------
// Generic BodyModel operations

namespace {

Ellipsoid ball_as_ellipsoid(const Ball& b) {
  if (!(b.radius > 0.0)) throw InvalidBody("ball radius must be positive");
  if (b.dim == 0) throw InvalidBody("ball dimension must be at least 1");
  DMat M = dmat_identity(b.dim);
  for (std::size_t i = 0; i < b.dim; ++i) M[i][i] = 1.0 / (b.radius * b.radius);
  return Ellipsoid::from_form_matrix(M);
}

// Cone-measure integral over an ellipsoid boundary via the sphere of outer
// normals: d(cone measure) pulls back to (u^T M^{-1} u)^{-n/2} / det(M) dsigma.
QuadResult ellipsoid_cone_integral(
    const Ellipsoid& E, const std::function<double(const BoundaryPoint&)>& f,
    double rel_tol, std::size_t max_panels) {
  const std::size_t n = E.dim();
  const double det_m = 1.0 / (E.shape_det() * E.shape_det());
  auto weight_at = [&](const DVec& u) {
    const BoundaryPoint bp = E.boundary_point_at_normal(u);
    const double q = bp.cone_density * bp.cone_density; // u^T M^{-1} u
    return f(bp) * std::pow(q, -static_cast<double>(n) / 2.0) / det_m;
  };
  if (n == 2) {
    auto integrand = [&](double theta) {
      return weight_at({std::cos(theta), std::sin(theta)});
    };
    return integrate_interval(integrand, 0.0, 2.0 * kPi, rel_tol, 1e-12,
                              max_panels);
  }
  if (n == 3) {
    auto integrand = [&](double x, double y, double z) {
      return weight_at({x, y, z});
    };
    return integrate_sphere3(integrand, rel_tol, 1e-12, max_panels);
  }
  throw ParamOutOfDomain(
      "boundary quadrature implemented for dimensions 2 and 3 only");
}

QuadResult polytope_cone_integral(
    const Polytope& P, const std::function<double(const BoundaryPoint&)>& f,
    double rel_tol, std::size_t max_panels) {
  if (P.dim() != 2) {
    throw ParamOutOfDomain("polytope boundary quadrature is planar only");
  }
  QuadResult total = quad_exact(0.0);
  for (const auto& facet : P.facets()) {
    if (facet.vertex_ids.size() != 2) {
      throw ParamOutOfDomain("planar facet without exactly two vertices");
    }
    const RatVec& v0 = P.vertices()[facet.vertex_ids[0]];
    const RatVec& v1 = P.vertices()[facet.vertex_ids[1]];
    const SegmentPiece seg{{to_double(v0[0]), to_double(v0[1])},
                           {to_double(v1[0]), to_double(v1[1])}};
    const double len = std::hypot(seg.b[0] - seg.a[0], seg.b[1] - seg.a[1]);
    auto integrand = [&](double s) {
      BoundaryPoint bp = segment_boundary_point(seg, s);
      // Orient the normal by the stored facet inequality <a, x> <= 1.
      const double ax = to_double(facet.normal[0]);
      const double ay = to_double(facet.normal[1]);
      if (bp.normal[0] * ax + bp.normal[1] * ay < 0.0) {
        bp.normal[0] = -bp.normal[0];
        bp.normal[1] = -bp.normal[1];
        bp.cone_density = -bp.cone_density;
      }
      return f(bp) * bp.cone_density * len;
    };
    total += integrate_interval(integrand, 0.0, 1.0, rel_tol, 1e-12, max_panels);
  }
  return total;
}

} // namespace

std::size_t body_dim(const BodyModel& K) {
  return std::visit(
      [](const auto& model) -> std::size_t {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, Ball>) return model.dim;
        else if constexpr (std::is_same_v<T, Ellipsoid>) return model.dim();
        else if constexpr (std::is_same_v<T, Piecewise2D>) return 2;
        else return model.poly.dim();
      },
      K);
}

double body_volume(const BodyModel& K) {
  return std::visit(
      [](const auto& model) -> double {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return unit_ball_volume(model.dim) *
                 std::pow(model.radius, static_cast<double>(model.dim));
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          return unit_ball_volume(model.dim()) * model.shape_det();
        } else if constexpr (std::is_same_v<T, Piecewise2D>) {
          return model.area();
        } else {
          return to_double(volume(model.poly));
        }
      },
      K);
}

double body_polar_volume(const BodyModel& K) {
  return std::visit(
      [](const auto& model) -> double {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return unit_ball_volume(model.dim) *
                 std::pow(model.radius, -static_cast<double>(model.dim));
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          return unit_ball_volume(model.dim()) / model.shape_det();
        } else if constexpr (std::is_same_v<T, Piecewise2D>) {
          return model.polar_area();
        } else {
          return to_double(volume(polar(model.poly)));
        }
      },
      K);
}

double body_support(const BodyModel& K, const DVec& dir) {
  return std::visit(
      [&dir](const auto& model) -> double {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, Ball>) {
          if (dir.size() != model.dim) {
            throw ParamOutOfDomain("support: dimension mismatch");
          }
          return model.radius * dnorm(dir);
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          return model.support(dir);
        } else if constexpr (std::is_same_v<T, Piecewise2D>) {
          return model.support(dir);
        } else {
          return model.poly.support(dir);
        }
      },
      K);
}

double body_support_gap(const BodyModel& A, const BodyModel& B,
                        const std::vector<DVec>& dirs) {
  if (dirs.empty()) throw EmptyDirections("support gap needs directions");
  double worst = 0.0;
  for (const auto& u : dirs) {
    worst = std::max(worst, std::abs(body_support(A, u) - body_support(B, u)));
  }
  return worst;
}

BodyModel reflect_body(const BodyModel& K, std::size_t axis) {
  const std::size_t n = body_dim(K);
  if (axis >= n) throw ParamOutOfDomain("reflection axis out of range");
  return std::visit(
      [axis, n](const auto& model) -> BodyModel {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return model;
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          DMat R = dmat_identity(n);
          R[axis][axis] = -1.0;
          return model.linear_image(R);
        } else if constexpr (std::is_same_v<T, Piecewise2D>) {
          return model.reflected(axis);
        } else {
          return PolytopeBody{
              apply_linear(model.poly, LinearMap::reflection(n, axis))};
        }
      },
      K);
}

BodyModel scale_body(const BodyModel& K, double t) {
  if (!(t > 0.0)) throw ParamOutOfDomain("scale factor must be positive");
  return std::visit(
      [t](const auto& model) -> BodyModel {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return Ball{model.radius * t, model.dim};
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          DMat S = dmat_identity(model.dim());
          for (auto& row : S)
            for (auto& v : row) v *= t;
          return model.linear_image(S);
        } else if constexpr (std::is_same_v<T, Piecewise2D>) {
          return model.scaled(t);
        } else {
          return PolytopeBody{apply_linear(
              model.poly,
              LinearMap::scaling(model.poly.dim(), rational_from_double(t)))};
        }
      },
      K);
}

BoundaryPoint boundary_point(const BodyModel& K, const DVec& u) {
  if (const auto* ball = std::get_if<Ball>(&K)) {
    return ball_as_ellipsoid(*ball).boundary_point_at_normal(u);
  }
  if (const auto* ell = std::get_if<Ellipsoid>(&K)) {
    return ell->boundary_point_at_normal(u);
  }
  throw ParamOutOfDomain("model has no normal parametrization");
}

BoundaryPoint boundary_point(const BodyModel& K, double theta) {
  if (const auto* pw = std::get_if<Piecewise2D>(&K)) {
    return pw->boundary_point_at_angle(theta);
  }
  throw ParamOutOfDomain("model has no angle parametrization");
}

QuadResult cone_measure_integral(
    const BodyModel& K, const std::function<double(const BoundaryPoint&)>& f,
    double rel_tol, std::size_t max_panels) {
  return std::visit(
      [&](const auto& model) -> QuadResult {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return ellipsoid_cone_integral(ball_as_ellipsoid(model), f, rel_tol,
                                         max_panels);
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          return ellipsoid_cone_integral(model, f, rel_tol, max_panels);
        } else if constexpr (std::is_same_v<T, Piecewise2D>) {
          return model.cone_measure_integral(f, rel_tol, max_panels);
        } else {
          return polytope_cone_integral(model.poly, f, rel_tol, max_panels);
        }
      },
      K);
}

double omega_closed_form(const BodyModel& K, const ConcFn& phi) {
  double det_a = 0.0;
  std::size_t n = 0;
  if (const auto* ball = std::get_if<Ball>(&K)) {
    n = ball->dim;
    det_a = std::pow(ball->radius, static_cast<double>(n));
  } else if (const auto* ell = std::get_if<Ellipsoid>(&K)) {
    n = ell->dim();
    det_a = ell->shape_det();
  } else {
    throw ParamOutOfDomain("closed form exists for balls and ellipsoids only");
  }
  return static_cast<double>(n) * unit_ball_volume(n) * det_a *
         phi(1.0 / (det_a * det_a));
}

QuadResult omega_quadrature(const BodyModel& K, const ConcFn& phi,
                            double rel_tol, std::size_t max_panels) {
  if (std::holds_alternative<PolytopeBody>(K)) {
    // Flat faces have kappa = 0 everywhere, and phi(0) = 0.
    return quad_exact(0.0);
  }
  if (const auto* pw = std::get_if<Piecewise2D>(&K)) {
    return pw->curvature_integral(phi, rel_tol, max_panels);
  }
  const std::size_t n = body_dim(K);
  auto f = [&phi, n](const BoundaryPoint& bp) {
    return phi(kappa_zero(bp, n));
  };
  return cone_measure_integral(K, f, rel_tol, max_panels);
}

QuadResult omega(const BodyModel& K, const ConcFn& phi, double rel_tol,
                 std::size_t max_panels) {
  if (std::holds_alternative<PolytopeBody>(K)) return quad_exact(0.0);
  if (std::holds_alternative<Ball>(K) || std::holds_alternative<Ellipsoid>(K)) {
    return quad_exact(omega_closed_form(K, phi));
  }
  return omega_quadrature(K, phi, rel_tol, max_panels);
}

QuadResult classical_asa(const BodyModel& K) {
  return omega(K, ConcFn::power(1.0, body_dim(K)));
}

Ellipsoid polar_ellipsoid(const Ellipsoid& E) { return E.polar(); }

Piecewise2D make_regular_ngon(std::size_t m) {
  if (m < 3) throw InvalidBody("regular polygon needs at least 3 vertices");
  std::vector<CurvePiece> pieces;
  pieces.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double a0 = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
    const double a1 =
        2.0 * kPi * static_cast<double>(k + 1) / static_cast<double>(m);
    pieces.push_back(SegmentPiece{{std::cos(a0), std::sin(a0)},
                                  {std::cos(a1), std::sin(a1)}});
  }
  return Piecewise2D(std::move(pieces));
}

Piecewise2D make_disc_slab(double lo, double hi) {
  if (!(lo >= -1.0 && lo < 0.0 && hi > 0.0 && hi <= 1.0)) {
    throw InvalidBody("disc slab needs -1 <= lo < 0 < hi <= 1");
  }
  const double s_hi = std::sqrt(std::max(0.0, 1.0 - hi * hi));
  const double s_lo = std::sqrt(std::max(0.0, 1.0 - lo * lo));
  const double a_hi = std::acos(hi); // angle of (hi, +s_hi)
  const double a_lo = std::acos(lo); // angle of (lo, +s_lo)
  std::vector<CurvePiece> pieces;
  if (hi < 1.0) {
    pieces.push_back(SegmentPiece{{hi, -s_hi}, {hi, s_hi}});
  }
  pieces.push_back(ArcPiece{{0.0, 0.0}, 1.0, a_hi, a_lo});
  if (lo > -1.0) {
    pieces.push_back(SegmentPiece{{lo, s_lo}, {lo, -s_lo}});
  }
  pieces.push_back(ArcPiece{{0.0, 0.0}, 1.0, 2.0 * kPi - a_lo, 2.0 * kPi - a_hi});
  return Piecewise2D(std::move(pieces));
}

} // namespace cvgeo
