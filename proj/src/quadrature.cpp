#include "cvgeo/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace cvgeo {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kNodes[8] = {
    -0.9602898564975362, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975362};
constexpr double kWeights[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

double gl8_panel(const std::function<double(double)>& f, double lo,
                 double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double acc = 0.0;
  for (int i = 0; i < 8; ++i) {
    acc += kWeights[i] * f(mid + half * kNodes[i]);
  }
  return acc * half;
}

double composite_level(const std::function<double(double)>& f, double a,
                       double b, std::size_t panels) {
  const double width = (b - a) / static_cast<double>(panels);
  double acc = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = (i + 1 == panels) ? b : lo + width;
    acc += gl8_panel(f, lo, hi);
  }
  return acc;
}

} // namespace

QuadResult integrate_interval(const std::function<double(double)>& f, double a,
                              double b, double rel_tol, double abs_floor,
                              std::size_t max_panels) {
  QuadResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::size_t panels = 1;
  double prev = composite_level(f, a, b, panels);
  res.value = prev;
  res.panels = panels;
  while (panels * 2 <= max_panels) {
    panels *= 2;
    const double cur = composite_level(f, a, b, panels);
    res.value = cur;
    res.panels = panels;
    const double tol = std::max(rel_tol * std::abs(cur), abs_floor);
    if (std::abs(cur - prev) < tol) {
      res.converged = true;
      return res;
    }
    prev = cur;
  }
  return res;
}

QuadResult integrate_sphere3(
    const std::function<double(double, double, double)>& f, double rel_tol,
    double abs_floor, std::size_t max_panels) {
  const double pi = 4.0 * std::atan(1.0);
  // Integrate over polar angle theta; the inner azimuth integral is itself
  // adaptive, with a tighter tolerance so inner error stays subordinate.
  bool inner_ok = true;
  std::size_t inner_panels_max = 0;
  auto outer = [&](double theta) {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    auto inner = [&](double phi) {
      return f(st * std::cos(phi), st * std::sin(phi), ct);
    };
    QuadResult ring =
        integrate_interval(inner, 0.0, 2.0 * pi, rel_tol * 0.1,
                           abs_floor * 0.1, max_panels);
    inner_ok = inner_ok && ring.converged;
    if (ring.panels > inner_panels_max) inner_panels_max = ring.panels;
    return ring.value * st;
  };
  QuadResult res =
      integrate_interval(outer, 0.0, pi, rel_tol, abs_floor, max_panels);
  res.converged = res.converged && inner_ok;
  res.panels += inner_panels_max;
  return res;
}

} // namespace cvgeo
