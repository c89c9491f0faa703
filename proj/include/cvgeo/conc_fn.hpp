#ifndef CVGEO_CONC_FN_HPP
#define CVGEO_CONC_FN_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace cvgeo {

// A concave weight function phi : [0, inf) -> [0, inf) with phi(0) = 0,
// used to weight centro-affine curvature in the curvature functional.
// Arguments t <= 0 evaluate to 0. Every factory validates concavity and
// non-negativity and throws InvalidConcFn on violation.
class ConcFn {
public:
  // phi(t) = t^(p / (n + p)) for p > 0 in ambient dimension n.
  static ConcFn power(double p, std::size_t ambient_dim);

  // phi(t) = t^a for an exponent a in (0, 1].
  static ConcFn power_exponent(double a);

  // phi(t) = min(alpha * t, beta), alpha > 0, beta > 0.
  static ConcFn affine_capped(double alpha, double beta);

  // Piecewise-linear interpolation of (t_i, v_i) points with t_i > 0,
  // prepended chord from (0, 0) and constant extension past the last point.
  // Requires strictly increasing t_i and non-increasing non-negative slopes.
  static ConcFn from_table(std::vector<std::pair<double, double>> points);

  // Wraps an arbitrary callable after sampling it on a logarithmic grid and
  // checking non-negativity, phi(0+) ~ 0, and midpoint concavity.
  static ConcFn from_callable(std::function<double(double)> f,
                              std::string label);

  double operator()(double t) const;
  const std::string& label() const { return label_; }

private:
  ConcFn(std::function<double(double)> fn, std::string label)
      : fn_(std::move(fn)), label_(std::move(label)) {}

  std::function<double(double)> fn_;
  std::string label_;
};

} // namespace cvgeo

#endif
