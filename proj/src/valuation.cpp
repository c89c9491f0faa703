#include "cvgeo/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "cvgeo/errors.hpp"
#include "cvgeo/linalg.hpp"

namespace cvgeo {

namespace {

EvalResult exact_result(Rational v) {
  EvalResult r;
  r.value = to_double(v);
  r.exact = std::move(v);
  r.converged = true;
  return r;
}

// a - b, exact when both sides are exact.
EvalResult difference(const EvalResult& a, const EvalResult& b) {
  EvalResult r;
  r.value = a.value - b.value;
  r.converged = a.converged && b.converged;
  if (a.exact && b.exact) r.exact = *a.exact - *b.exact;
  return r;
}

EvalResult absolute(EvalResult r) {
  r.value = std::abs(r.value);
  if (r.exact) r.exact = abs(*r.exact);
  return r;
}

EvalResult half_combine(const EvalResult& a, const EvalResult& b, int sign) {
  EvalResult r;
  r.value = 0.5 * (a.value + sign * b.value);
  r.converged = a.converged && b.converged;
  if (a.exact && b.exact) {
    r.exact = (*a.exact + Rational(sign) * *b.exact) / Rational(2);
  }
  return r;
}

std::string spec_label(const ValuationSpec& spec) {
  if (const auto* oracle = std::get_if<OracleSpec>(&spec)) return oracle->label;
  return "composite";
}

double dmat_det(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) == 0.0) return 0.0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= factor * a[col][j];
    }
  }
  return det;
}

Polytope make_cube(std::size_t n, const Rational& half_width) {
  std::vector<RatVec> pts;
  pts.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVec p(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = (mask >> i) & 1 ? half_width : -half_width;
    }
    pts.push_back(std::move(p));
  }
  return Polytope::from_points(pts);
}

Polytope make_cross(std::size_t n, const Rational& scale) {
  std::vector<RatVec> pts;
  pts.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec plus(n, Rational(0)), minus(n, Rational(0));
    plus[i] = scale;
    minus[i] = -scale;
    pts.push_back(std::move(plus));
    pts.push_back(std::move(minus));
  }
  return Polytope::from_points(pts);
}

struct ScaledEvaluator {
  std::function<EvalResult(double)> at_scale;
};

HomogeneityReport homogeneity_impl(const ScaledEvaluator& ev,
                                   const std::vector<double>& t_grid) {
  if (t_grid.size() < 3) {
    throw ParamOutOfDomain("homogeneity fit needs at least 3 scale factors");
  }
  HomogeneityReport rep;
  std::vector<double> xs, ys;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw ParamOutOfDomain("scale factors must be positive");
    const EvalResult r = ev.at_scale(t);
    rep.values.push_back(r.value);
    if (std::abs(r.value) < 1e-300) {
      throw ZeroBaseline("valuation vanishes on the scale grid");
    }
    xs.push_back(std::log(t));
    ys.push_back(std::log(std::abs(r.value)));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw ParamOutOfDomain("scale grid has no spread");
  rep.q_hat = sxy / sxx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fit = my + rep.q_hat * (xs[i] - mx);
    rep.max_log_residual = std::max(rep.max_log_residual, std::abs(ys[i] - fit));
  }
  return rep;
}

} // namespace

EvalResult evaluate(const ValuationSpec& spec, const Polytope& P) {
  if (const auto* oracle = std::get_if<OracleSpec>(&spec)) {
    if (oracle->on_polytope) return oracle->on_polytope(P);
    if (oracle->on_body) return oracle->on_body(PolytopeBody{P});
    throw ParamOutOfDomain("oracle has no polytope evaluation");
  }
  const auto& c = std::get<CompositeSpec>(spec);
  // The curvature term vanishes on polytopes, so the sum is exact.
  Rational v = c.c0 + c.c1 * volume(P) + c.c2 * volume(polar(P));
  return exact_result(std::move(v));
}

EvalResult evaluate(const ValuationSpec& spec, const BodyModel& K) {
  if (const auto* oracle = std::get_if<OracleSpec>(&spec)) {
    if (oracle->on_body) return oracle->on_body(K);
    if (const auto* pb = std::get_if<PolytopeBody>(&K)) {
      if (oracle->on_polytope) return oracle->on_polytope(pb->poly);
    }
    throw ParamOutOfDomain("oracle has no body evaluation");
  }
  const auto& c = std::get<CompositeSpec>(spec);
  if (const auto* pb = std::get_if<PolytopeBody>(&K)) {
    return evaluate(spec, pb->poly);
  }
  EvalResult r;
  r.value = to_double(c.c0) + to_double(c.c1) * body_volume(K) +
            to_double(c.c2) * body_polar_volume(K);
  if (c.phi) {
    const QuadResult om = omega(K, *c.phi);
    r.value += om.value;
    r.converged = om.converged;
  }
  return r;
}

std::pair<OracleSpec, OracleSpec> even_odd_split(const ValuationSpec& spec,
                                                 std::size_t axis) {
  auto on_polytope = [spec, axis](int sign) {
    return [spec, axis, sign](const Polytope& P) {
      const EvalResult a = evaluate(spec, P);
      const EvalResult b =
          evaluate(spec, apply_linear(P, LinearMap::reflection(P.dim(), axis)));
      return half_combine(a, b, sign);
    };
  };
  auto on_body = [spec, axis](int sign) {
    return [spec, axis, sign](const BodyModel& K) {
      const EvalResult a = evaluate(spec, K);
      const EvalResult b = evaluate(spec, reflect_body(K, axis));
      return half_combine(a, b, sign);
    };
  };
  OracleSpec even{on_polytope(+1), on_body(+1), spec_label(spec) + ":even"};
  OracleSpec odd{on_polytope(-1), on_body(-1), spec_label(spec) + ":odd"};
  return {std::move(even), std::move(odd)};
}

EvalResult check_valuation_identity(const ValuationSpec& spec,
                                    const Polytope& K, const Polytope& L) {
  const Polytope U = convex_union(K, L);
  const Polytope I = intersect(K, L);
  // K u L is convex exactly when the hull adds no volume.
  if (volume(U) != volume(K) + volume(L) - volume(I)) {
    throw UnionNotConvex("union of the pair is not convex");
  }
  const EvalResult lhs =
      half_combine(evaluate(spec, U), evaluate(spec, I), +1);
  const EvalResult rhs =
      half_combine(evaluate(spec, K), evaluate(spec, L), +1);
  // half_combine halves both sides, so the difference is half the residual;
  // undo the factor to report mu(U) + mu(I) - mu(K) - mu(L) itself.
  EvalResult d = difference(lhs, rhs);
  d.value *= 2.0;
  if (d.exact) d.exact = *d.exact * Rational(2);
  return absolute(d);
}

EvalResult check_valuation_identity(const ValuationSpec& spec,
                                    const BodyModel& K, const BodyModel& L,
                                    const BodyModel& unionKL,
                                    const BodyModel& interKL) {
  const EvalResult u = evaluate(spec, unionKL);
  const EvalResult i = evaluate(spec, interKL);
  const EvalResult k = evaluate(spec, K);
  const EvalResult l = evaluate(spec, L);
  EvalResult d;
  d.value = u.value + i.value - k.value - l.value;
  d.converged = u.converged && i.converged && k.converged && l.converged;
  if (u.exact && i.exact && k.exact && l.exact) {
    d.exact = *u.exact + *i.exact - *k.exact - *l.exact;
  }
  return absolute(d);
}

EvalResult check_sl_invariance(const ValuationSpec& spec, const Polytope& K,
                               const LinearMap& A) {
  if (!A.is_unimodular()) {
    throw NotUnimodular("invariance check requires det(A) = 1");
  }
  return absolute(
      difference(evaluate(spec, apply_linear(K, A)), evaluate(spec, K)));
}

EvalResult check_sl_invariance(const ValuationSpec& spec, const BodyModel& K,
                               const std::vector<std::vector<double>>& A) {
  if (std::abs(dmat_det(A) - 1.0) > 1e-9) {
    throw NotUnimodular("invariance check requires det(A) = 1");
  }
  BodyModel image = std::visit(
      [&A](const auto& model) -> BodyModel {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return Ellipsoid::from_form_matrix(
                     [&] {
                       std::vector<std::vector<double>> M(
                           model.dim, std::vector<double>(model.dim, 0.0));
                       for (std::size_t i = 0; i < model.dim; ++i) {
                         M[i][i] = 1.0 / (model.radius * model.radius);
                       }
                       return M;
                     }())
              .linear_image(A);
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          return model.linear_image(A);
        } else {
          throw ParamOutOfDomain(
              "smooth invariance check supports ball/ellipsoid models");
        }
      },
      K);
  return absolute(difference(evaluate(spec, image), evaluate(spec, K)));
}

HomogeneityReport homogeneity_degree(const ValuationSpec& spec,
                                     const Polytope& K,
                                     const std::vector<double>& t_grid) {
  ScaledEvaluator ev{[&spec, &K](double t) {
    const LinearMap S = LinearMap::scaling(K.dim(), rational_from_double(t));
    return evaluate(spec, apply_linear(K, S));
  }};
  return homogeneity_impl(ev, t_grid);
}

HomogeneityReport homogeneity_degree(const ValuationSpec& spec,
                                     const BodyModel& K,
                                     const std::vector<double>& t_grid) {
  ScaledEvaluator ev{[&spec, &K](double t) {
    return evaluate(spec, scale_body(K, t));
  }};
  return homogeneity_impl(ev, t_grid);
}

DecompositionReport decompose(const ValuationSpec& spec, std::size_t n,
                              const std::vector<double>& s_grid) {
  DecompositionReport rep;
  rep.oracle_caveat = std::holds_alternative<OracleSpec>(spec);

  const std::vector<Polytope> triple = {
      make_cube(n, Rational(1)), make_cube(n, Rational(2)),
      make_cross(n, Rational(1))};

  RatMat rows;
  RatVec rhs;
  for (const Polytope& P : triple) {
    rows.push_back({Rational(1), volume(P), volume(polar(P))});
    const EvalResult r = evaluate(spec, P);
    rhs.push_back(r.exact ? *r.exact : rational_from_double(r.value));
  }
  if (determinant(rows) == Rational(0)) {
    throw SingularFittingSystem("fitting triple rows are linearly dependent");
  }
  const RatVec coeffs = *solve(rows, rhs);
  rep.c0 = coeffs[0];
  rep.c1 = coeffs[1];
  rep.c2 = coeffs[2];

  // Residuals on polytopes outside the fitting triple.
  const std::vector<Polytope> validation = {
      make_cube(n, Rational(3, 2)), make_cross(n, Rational(1, 2)),
      make_cube(n, Rational(5, 4))};
  for (const Polytope& P : validation) {
    const EvalResult r = evaluate(spec, P);
    const Rational predicted =
        rep.c0 + rep.c1 * volume(P) + rep.c2 * volume(polar(P));
    if (r.exact) {
      rep.validation_residuals.push_back(to_double(abs(*r.exact - predicted)));
    } else {
      rep.validation_residuals.push_back(
          std::abs(r.value - to_double(predicted)));
    }
  }

  // Stage 2: curvature weight from balls. mu(tB) = c0 + c1 kappa_n t^n +
  // c2 kappa_n t^-n + n kappa_n t^n phi(t^-2n); invert at t = s^(-1/(2n)).
  const auto* oracle = std::get_if<OracleSpec>(&spec);
  const bool can_eval_bodies =
      !oracle || static_cast<bool>(oracle->on_body);
  if (can_eval_bodies) {
    const double kn = unit_ball_volume(n);
    const double nd = static_cast<double>(n);
    for (double s : s_grid) {
      if (!(s > 0.0)) throw ParamOutOfDomain("phi sample points must be positive");
      const double t = std::pow(s, -1.0 / (2.0 * nd));
      const EvalResult mu = evaluate(spec, BodyModel(Ball{t, n}));
      const double tn = std::pow(t, nd);
      const double phi_hat =
          (mu.value - to_double(rep.c0) - to_double(rep.c1) * kn * tn -
           to_double(rep.c2) * kn / tn) /
          (nd * kn * tn);
      rep.phi_samples.emplace_back(s, phi_hat);
    }
  }
  return rep;
}

UscReport usc_probe(const ValuationSpec& spec,
                    const std::vector<BodyModel>& sequence,
                    const BodyModel& limit, double slack) {
  if (sequence.size() < 2) {
    throw ParamOutOfDomain("semicontinuity probe needs at least 2 bodies");
  }
  const auto dirs = sphere_directions(body_dim(limit), 64);
  UscReport rep;
  for (const BodyModel& K : sequence) {
    rep.gaps.push_back(body_support_gap(K, limit, dirs));
  }
  for (std::size_t i = 1; i < rep.gaps.size(); ++i) {
    if (rep.gaps[i] > rep.gaps[i - 1] + 1e-12) {
      throw NotConverging("support gap to the limit body is not decreasing");
    }
  }
  for (const BodyModel& K : sequence) {
    const EvalResult r = evaluate(spec, K);
    rep.values.push_back(r.value);
    rep.converged = rep.converged && r.converged;
  }
  const EvalResult lim = evaluate(spec, limit);
  rep.limit_value = lim.value;
  rep.converged = rep.converged && lim.converged;
  const std::size_t tail_start = sequence.size() / 2;
  rep.tail_max = rep.values[tail_start];
  for (std::size_t i = tail_start; i < rep.values.size(); ++i) {
    rep.tail_max = std::max(rep.tail_max, rep.values[i]);
  }
  rep.bound_holds = rep.tail_max <= rep.limit_value + slack;
  return rep;
}

} // namespace cvgeo
