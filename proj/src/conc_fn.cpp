#include "cvgeo/conc_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cvgeo/errors.hpp"

namespace cvgeo {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

} // namespace

ConcFn ConcFn::power(double p, std::size_t ambient_dim) {
  if (!(p > 0.0) || !std::isfinite(p) || ambient_dim == 0) {
    throw InvalidConcFn("power weight needs p > 0 and ambient_dim >= 1");
  }
  const double a = p / (static_cast<double>(ambient_dim) + p);
  ConcFn fn = power_exponent(a);
  fn.label_ = "power:p=" + fmt(p) + ",n=" + fmt(static_cast<double>(ambient_dim));
  return fn;
}

ConcFn ConcFn::power_exponent(double a) {
  if (!(a > 0.0) || !(a <= 1.0)) {
    throw InvalidConcFn("power exponent must lie in (0, 1], got " + fmt(a));
  }
  auto eval = [a](double t) { return t <= 0.0 ? 0.0 : std::pow(t, a); };
  return ConcFn(eval, "power_exponent:a=" + fmt(a));
}

ConcFn ConcFn::affine_capped(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw InvalidConcFn("affine_capped needs alpha > 0 and beta > 0");
  }
  auto eval = [alpha, beta](double t) {
    return t <= 0.0 ? 0.0 : std::min(alpha * t, beta);
  };
  return ConcFn(eval, "affine_capped:alpha=" + fmt(alpha) + ",beta=" + fmt(beta));
}

ConcFn ConcFn::from_table(std::vector<std::pair<double, double>> points) {
  if (points.empty()) {
    throw InvalidConcFn("table weight needs at least one point");
  }
  std::sort(points.begin(), points.end());
  double prev_t = 0.0;
  double prev_v = 0.0;
  double prev_slope = std::numeric_limits<double>::infinity();
  for (const auto& [t, v] : points) {
    if (!(t > prev_t)) {
      throw InvalidConcFn("table abscissae must be strictly increasing and positive");
    }
    if (v < 0.0 || !std::isfinite(v)) {
      throw InvalidConcFn("table values must be finite and non-negative");
    }
    const double slope = (v - prev_v) / (t - prev_t);
    if (slope < 0.0) {
      throw InvalidConcFn("table is decreasing at t = " + fmt(t));
    }
    if (slope > prev_slope + 1e-12 * std::max(1.0, std::abs(prev_slope))) {
      throw InvalidConcFn("table violates concavity at t = " + fmt(t));
    }
    prev_slope = slope;
    prev_t = t;
    prev_v = v;
  }
  auto eval = [points](double t) {
    if (t <= 0.0) return 0.0;
    double lo_t = 0.0;
    double lo_v = 0.0;
    for (const auto& [pt, pv] : points) {
      if (t <= pt) {
        return lo_v + (pv - lo_v) * (t - lo_t) / (pt - lo_t);
      }
      lo_t = pt;
      lo_v = pv;
    }
    return points.back().second; // constant tail keeps concavity
  };
  return ConcFn(eval, "table:" + fmt(static_cast<double>(points.size())) + "pts");
}

ConcFn ConcFn::from_callable(std::function<double(double)> f,
                             std::string label) {
  if (!f) {
    throw InvalidConcFn("empty callable");
  }
  // Sample a logarithmic grid, then check range, behaviour near zero, and
  // midpoint concavity f((s+t)/2) >= (f(s)+f(t))/2 - tol.
  std::vector<double> grid;
  for (int e = -18; e <= 18; ++e) {
    grid.push_back(std::pow(2.0, e));
  }
  std::vector<double> vals(grid.size());
  double scale = 1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = f(grid[i]);
    if (!std::isfinite(vals[i]) || vals[i] < 0.0) {
      throw InvalidConcFn("callable is negative or non-finite at t = " +
                          fmt(grid[i]));
    }
    scale = std::max(scale, vals[i]);
  }
  if (f(0.0) != 0.0 || f(-1.0) != 0.0) {
    throw InvalidConcFn("callable must vanish on t <= 0");
  }
  // Concavity on (0, inf) forces monotone non-decreasing values when
  // f >= 0 and f(0+) = 0; check both properties on the grid.
  const double tol = 1e-9 * scale;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (vals[i] < vals[i - 1] - tol) {
      throw InvalidConcFn("callable decreases at t = " + fmt(grid[i]));
    }
  }
  for (std::size_t i = 0; i + 2 < grid.size(); ++i) {
    for (std::size_t j = i + 2; j < grid.size(); ++j) {
      const double mid = 0.5 * (grid[i] + grid[j]);
      if (f(mid) < 0.5 * (vals[i] + vals[j]) - tol) {
        throw InvalidConcFn("callable violates midpoint concavity on [" +
                            fmt(grid[i]) + ", " + fmt(grid[j]) + "]");
      }
    }
  }
  return ConcFn(std::move(f), std::move(label));
}

double ConcFn::operator()(double t) const { return t <= 0.0 ? 0.0 : fn_(t); }

} // namespace cvgeo
