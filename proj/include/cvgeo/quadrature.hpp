#ifndef CVGEO_QUADRATURE_HPP
#define CVGEO_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace cvgeo {

struct QuadResult {
  double value = 0.0;
  bool converged = false;
  std::size_t panels = 0; // panel count of the accepted refinement level

  QuadResult& operator+=(const QuadResult& other) {
    value += other.value;
    converged = converged && other.converged;
    panels += other.panels;
    return *this;
  }
};

inline QuadResult quad_exact(double v) { return {v, true, 0}; }

// Composite Gauss-Legendre over [a, b] with uniform panel halving.
// Refines until successive levels differ by < max(rel_tol*|I|, abs_floor)
// or the panel budget is exhausted (converged = false, best estimate kept).
// Panels are summed in index order, so results are deterministic.
QuadResult integrate_interval(const std::function<double(double)>& f, double a,
                              double b, double rel_tol = 1e-8,
                              double abs_floor = 1e-12,
                              std::size_t max_panels = 4096);

// Integral over the unit sphere S^2 (area measure), via the iterated
// polar/azimuth reduction with the same refinement policy.
QuadResult integrate_sphere3(
    const std::function<double(double, double, double)>& f,
    double rel_tol = 1e-8, double abs_floor = 1e-12,
    std::size_t max_panels = 4096);

} // namespace cvgeo

#endif
