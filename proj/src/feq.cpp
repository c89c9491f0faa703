#include "cvgeo/feq.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "cvgeo/errors.hpp"
#include "cvgeo/linalg.hpp"

namespace cvgeo {

namespace {

Rational rat_abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

Polytope make_diamond(const Rational& a, const Rational& b, const Rational& c,
                      const Rational& d) {
  return make_interval_hull({a, c}, {b, d});
}

Rational exact_eval(const ValuationSpec& spec, const Polytope& P) {
  const EvalResult r = evaluate(spec, P);
  return r.exact ? *r.exact : rational_from_double(r.value);
}

} // namespace

GridFunction1D GridFunction1D::from_points(
    std::vector<std::pair<Rational, Rational>> points) {
  GridFunction1D g;
  for (auto& [x, v] : points) {
    auto [it, inserted] = g.points_.emplace(x, v);
    if (!inserted && it->second != v) {
      throw PreconditionViolated("conflicting samples at one abscissa");
    }
  }
  return g;
}

std::optional<Rational> GridFunction1D::at(const Rational& x) const {
  const auto it = points_.find(x);
  if (it == points_.end()) return std::nullopt;
  return it->second;
}

void GridFunction2D::set(const Rational& x, const Rational& y, Rational value) {
  points_[{x, y}] = std::move(value);
}

std::optional<Rational> GridFunction2D::at(const Rational& x,
                                           const Rational& y) const {
  const auto it = points_.find({x, y});
  if (it == points_.end()) return std::nullopt;
  return it->second;
}

std::vector<Rational> default_additive_grid() {
  std::vector<Rational> g;
  for (int j = -8; j <= 8; ++j) g.emplace_back(j, 4);
  return g;
}

std::vector<Rational> default_multiplicative_grid() {
  std::vector<Rational> g;
  for (int i = -4; i <= 4; ++i) g.push_back(pow2(i));
  return g;
}

Rational pow2(int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= 2;
  for (int i = 0; i > k; --i) r /= 2;
  return r;
}

// ---------------------------------------------------------------------------

CauchyReport cauchy_residual(const GridFunction1D& h) {
  CauchyReport rep;
  const auto& pts = h.points();
  for (auto i = pts.begin(); i != pts.end(); ++i) {
    for (auto j = i; j != pts.end(); ++j) {
      const Rational sum = i->first + j->first;
      const auto at_sum = h.at(sum);
      if (!at_sum) continue;
      ++rep.triple_count;
      rep.max_additivity_residual =
          std::max(rep.max_additivity_residual,
                   rat_abs(*at_sum - i->second - j->second));
    }
  }
  if (rep.triple_count < 10) {
    throw InsufficientTriples(
        "additive probe needs at least 10 in-grid triples");
  }
  Rational sxx(0), sxv(0);
  for (const auto& [x, v] : pts) {
    sxx += x * x;
    sxv += x * v;
  }
  if (sxx == 0) throw InsufficientTriples("grid carries no nonzero abscissa");
  rep.slope = sxv / sxx;
  for (const auto& [x, v] : pts) {
    rep.max_linear_residual =
        std::max(rep.max_linear_residual, rat_abs(v - rep.slope * x));
  }
  return rep;
}

// ---------------------------------------------------------------------------

IntervalValuation interval_valuation(const ValuationSpec& spec) {
  return [spec](const Rational& a, const Rational& b) {
    if (!(a > 0) || !(b > 0)) {
      throw ParamOutOfDomain("interval endpoints must be positive");
    }
    const Polytope P = Polytope::from_points({RatVec{Rational(-a)}, RatVec{b}});
    return exact_eval(spec, P);
  };
}

Rational one_dim_split_residual(
    const IntervalValuation& mu,
    const std::vector<std::pair<Rational, Rational>>& ab_pairs) {
  const Rational one(1), two(2);
  Rational worst(0);
  for (const auto& [a, b] : ab_pairs) {
    const Rational lhs = mu(a, b);
    const Rational rhs = mu(a, a) / two + mu(b, b) / two +
                         (mu(one, b) - mu(b, one)) / two -
                         (mu(one, a) - mu(a, one)) / two;
    worst = std::max(worst, rat_abs(lhs - rhs));
  }
  return worst;
}

// ---------------------------------------------------------------------------

Q2Report extract_F_on_Q2(const ValuationSpec& spec,
                         const std::vector<Rational>& grid) {
  if (grid.empty()) throw ParamOutOfDomain("empty sample grid");
  for (const Rational& g : grid) {
    if (!(g > 0)) throw ParamOutOfDomain("grid values must be positive");
  }

  // Evenness under both coordinate reflections, on asymmetric diamonds.
  const std::vector<std::array<Rational, 4>> probes = {
      {Rational(1), Rational(2), Rational(1), Rational(1)},
      {Rational(1), Rational(3), Rational(1, 2), Rational(2)},
      {Rational(1, 2), Rational(1), Rational(2), Rational(3)}};
  for (const auto& [a, b, c, d] : probes) {
    const Rational base = exact_eval(spec, make_diamond(a, b, c, d));
    if (exact_eval(spec, make_diamond(b, a, c, d)) != base ||
        exact_eval(spec, make_diamond(a, b, d, c)) != base) {
      throw NotEven("valuation is not even under coordinate reflections");
    }
  }

  Q2Report rep;
  std::vector<std::pair<Rational, Rational>> f_samples;
  std::vector<Rational> products;
  for (const Rational& x : grid) {
    for (const Rational& y : grid) {
      products.push_back(x * y);
    }
  }
  std::sort(products.begin(), products.end());
  products.erase(std::unique(products.begin(), products.end()),
                 products.end());
  const Rational one(1);
  for (const Rational& s : products) {
    const Rational mu_sym = exact_eval(spec, make_diamond(s, s, one, one));
    f_samples.emplace_back(s, mu_sym / Rational(4));
  }
  rep.F = GridFunction1D::from_points(std::move(f_samples));

  for (const Rational& a : grid) {
    for (const Rational& b : grid) {
      for (const Rational& c : grid) {
        for (const Rational& d : grid) {
          const Rational mu = exact_eval(spec, make_diamond(a, b, c, d));
          const Rational predicted = *rep.F.at(a * c) + *rep.F.at(b * c) +
                                     *rep.F.at(a * d) + *rep.F.at(b * d);
          rep.max_residual = std::max(rep.max_residual, rat_abs(mu - predicted));
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

R2Report fit_R2_descriptor(const ValuationSpec& spec) {
  R2Report rep;
  const Rational one(1), two(2), half(1, 2);

  // Slant-linear coefficient: on the quadrilateral family the valuation has
  // the form sum F(products) + k (1/b^2 - 1/a^2)(x + y); probe with
  // (a,b,c,d) = (1,2,1,1) at slant sums 0 and 1, where 1/b^2 - 1/a^2 = -3/4.
  const Rational mu0 =
      exact_eval(spec, make_apex_quad(one, two, one, one, Rational(0), Rational(0)));
  const Rational mu1 =
      exact_eval(spec, make_apex_quad(one, two, one, one, half, half));
  rep.k = (mu0 - mu1) * Rational(4, 3);

  // F from symmetric diamonds.
  auto F_of = [&spec, &one](const Rational& s) {
    return exact_eval(spec, make_diamond(s, s, one, one)) / Rational(4);
  };

  const std::vector<Rational> fit_r = {half, one, two};
  RatMat rows;
  RatVec rhs;
  for (const Rational& r : fit_r) {
    rows.push_back({Rational(one / r), one, r});
    rhs.push_back(F_of(r));
  }
  if (determinant(rows) == Rational(0)) {
    throw SingularFittingSystem("descriptor fit rows are dependent");
  }
  const RatVec c = *solve(rows, rhs);
  rep.c1 = c[0];
  rep.c2 = c[1];
  rep.c3 = c[2];
  rep.c1_matches_minus_2k = (rep.c1 == -two * rep.k);

  auto F_hat = [&rep](const Rational& r) {
    return rep.c1 / r + rep.c2 + rep.c3 * r;
  };
  for (const Rational& r : {Rational(1, 4), Rational(4)}) {
    rep.max_fit_residual =
        std::max(rep.max_fit_residual, rat_abs(F_of(r) - F_hat(r)));
  }

  // Reconstruction residual on slanted quadrilaterals.
  struct QuadParams {
    Rational a, b, c, d, x, y;
  };
  const std::vector<QuadParams> family = {
      {one, two, one, two, Rational(1, 4), Rational(1, 4)},
      {one, two, one, one, half, half},
      {one, one, one, one, Rational(1, 4), Rational(0)},
      {two, Rational(3), one, two, Rational(-1, 4), Rational(1, 4)}};
  for (const auto& q : family) {
    const Rational mu =
        exact_eval(spec, make_apex_quad(q.a, q.b, q.c, q.d, q.x, q.y));
    const Rational predicted =
        F_hat(q.a * q.c) + F_hat(q.b * q.c) + F_hat(q.a * q.d) +
        F_hat(q.b * q.d) +
        rep.k * (one / (q.b * q.b) - one / (q.a * q.a)) * (q.x + q.y);
    rep.max_family_residual =
        std::max(rep.max_family_residual, rat_abs(mu - predicted));
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct LatticeTable {
  const GridFunction2D& g;
  const Rational& unit;
  int kmax;

  Rational at(int i, int j) const {
    const auto v = g.at(unit * i, unit * j);
    if (!v) {
      throw PreconditionViolated(
          "lattice table misses a cell inside the checked box");
    }
    return *v;
  }
};

} // namespace

AnnihilationReport odd_grid_annihilation(const GridFunction2D& G,
                                         const Rational& unit, int kmax) {
  if (!(unit > 0) || kmax < 2) {
    throw ParamOutOfDomain("annihilation check needs unit > 0 and kmax >= 2");
  }
  const LatticeTable T{G, unit, kmax};

  // Preconditions: antisymmetry, vanishing on both axes and the
  // anti-diagonal. These are the properties inherited from oddness and
  // invariance; everything else must then follow from the recurrences.
  for (int i = -kmax; i <= kmax; ++i) {
    if (T.at(i, 0) != 0 || T.at(0, i) != 0) {
      throw PreconditionViolated("table does not vanish on the axes");
    }
    if (T.at(i, -i) != 0) {
      throw PreconditionViolated("table does not vanish on the anti-diagonal");
    }
    for (int j = -kmax; j <= kmax; ++j) {
      if (T.at(i, j) != -T.at(j, i)) {
        throw PreconditionViolated("table is not antisymmetric");
      }
    }
  }

  AnnihilationReport rep;
  auto note = [&rep](const Rational& residual) {
    rep.max_recurrence_residual =
        std::max(rep.max_recurrence_residual, rat_abs(residual));
    ++rep.recurrences_checked;
  };

  // Replay the induction over m = max(k, l) for both lattice base steps
  // b = +1 and b = -1 (the -x instances feed the mixed-sign terms).
  for (int b : {1, -1}) {
    for (int m = 2; m <= kmax; ++m) {
      const int k = m;
      for (int l = 1; l <= k - 1; ++l) {
        // G(kx,-lx) = G((k-1)x,-(l-1)x) - G(-x,-(l-1)x) - G((k-1)x,x)
        note(T.at(k * b, -l * b) -
             (T.at((k - 1) * b, -(l - 1) * b) - T.at(-b, -(l - 1) * b) -
              T.at((k - 1) * b, b)));
        // G(kx,lx) = G((k-1)x,(l+1)x) - G(-x,(l+1)x) - G((k-1)x,x)
        note(T.at(k * b, l * b) -
             (T.at((k - 1) * b, (l + 1) * b) - T.at(-b, (l + 1) * b) -
              T.at((k - 1) * b, b)));
      }
    }
  }

  // r-independence of G(b+r,d-r) - G(a+r,d-r) - G(b+r,c-r) + G(a+r,c-r).
  const std::vector<std::array<int, 4>> tuples = {
      {0, 1, 0, 1}, {1, 2, 0, 1}, {0, 2, 1, 3}, {-1, 1, -1, 1}};
  for (const auto& [a, bb, cc, d] : tuples) {
    auto expr = [&](int r) {
      return T.at(bb + r, d - r) - T.at(a + r, d - r) - T.at(bb + r, cc - r) +
             T.at(a + r, cc - r);
    };
    int max_abs = std::max({std::abs(a), std::abs(bb), std::abs(cc), std::abs(d)});
    for (int r = -2; r <= 2; ++r) {
      if (max_abs + std::abs(r) > kmax) continue;
      rep.max_independence_residual =
          std::max(rep.max_independence_residual, rat_abs(expr(r) - expr(0)));
    }
  }

  rep.all_cells_zero = true;
  for (int i = -kmax; i <= kmax && rep.all_cells_zero; ++i) {
    for (int j = -kmax; j <= kmax; ++j) {
      if (T.at(i, j) != 0) {
        rep.all_cells_zero = false;
        break;
      }
    }
  }
  rep.forced_zero = rep.all_cells_zero &&
                    rep.max_recurrence_residual == 0 &&
                    rep.max_independence_residual == 0;
  return rep;
}

GridFunction2D odd_table_from_valuation(const ValuationSpec& spec, int kmax,
                                        const Rational& unit) {
  if (kmax < 0 || !(unit > 0)) {
    throw ParamOutOfDomain("lattice table needs kmax >= 0 and unit > 0");
  }
  const Rational one(1);
  GridFunction2D table;
  for (int k = -kmax; k <= kmax; ++k) {
    for (int l = -kmax; l <= kmax; ++l) {
      const Rational x = pow2(k);
      const Rational y = pow2(l);
      // Odd part under the axis-0 reflection, which maps
      // diamond(a,b,c,d) to diamond(b,a,c,d).
      const Rational plus = exact_eval(spec, make_diamond(one, x, one, y));
      const Rational minus = exact_eval(spec, make_diamond(x, one, one, y));
      table.set(unit * k, unit * l, (plus - minus) / Rational(2));
    }
  }
  return table;
}

} // namespace cvgeo
