#ifndef CVGEO_FEQ_HPP
#define CVGEO_FEQ_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cvgeo/rational.hpp"
#include "cvgeo/valuation.hpp"

namespace cvgeo {

// Exact-valued function samples on a finite set of rational abscissae.
class GridFunction1D {
public:
  GridFunction1D() = default;
  static GridFunction1D from_points(
      std::vector<std::pair<Rational, Rational>> points);

  std::optional<Rational> at(const Rational& x) const;
  const std::map<Rational, Rational>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

private:
  std::map<Rational, Rational> points_;
};

// Exact-valued function samples on a finite set of rational planar points.
class GridFunction2D {
public:
  GridFunction2D() = default;

  void set(const Rational& x, const Rational& y, Rational value);
  std::optional<Rational> at(const Rational& x, const Rational& y) const;
  const std::map<std::pair<Rational, Rational>, Rational>& points() const {
    return points_;
  }
  std::size_t size() const { return points_.size(); }

private:
  std::map<std::pair<Rational, Rational>, Rational> points_;
};

// Additive sample grid {j/4 : -8 <= j <= 8} and multiplicative grid
// {2^i : -4 <= i <= 4} used as defaults by the verification suites.
std::vector<Rational> default_additive_grid();
std::vector<Rational> default_multiplicative_grid();

// Exact power of two as a rational.
Rational pow2(int k);

// ---------------------------------------------------------------------------
// Additive Cauchy probe

struct CauchyReport {
  Rational slope = Rational(0);     // least-squares line through the origin
  Rational max_additivity_residual = Rational(0); // |h(x+y) - h(x) - h(y)|
  Rational max_linear_residual = Rational(0);     // |h(x) - slope * x|
  std::size_t triple_count = 0;
};

// Checks h(x + y) = h(x) + h(y) over every grid triple (x, y, x+y) whose
// three abscissae all carry samples; requires at least 10 such triples.
CauchyReport cauchy_residual(const GridFunction1D& h);

// ---------------------------------------------------------------------------
// One-dimensional splitting

// An interval valuation: (a, b) -> mu([-a, b]) for a, b > 0.
using IntervalValuation =
    std::function<Rational(const Rational&, const Rational&)>;

// Wraps a spec as an interval valuation via exact 1-D polytopes.
IntervalValuation interval_valuation(const ValuationSpec& spec);

// Max residual of the splitting identity
//   mu[-a,b] = mu[-a,a]/2 + mu[-b,b]/2
//            + (mu[-1,b] - mu[-b,1])/2 - (mu[-1,a] - mu[-a,1])/2,
// which holds exactly whenever mu[-a,b] decomposes as F(a) + G(b).
Rational one_dim_split_residual(
    const IntervalValuation& mu,
    const std::vector<std::pair<Rational, Rational>>& ab_pairs);

// ---------------------------------------------------------------------------
// Even description on the axis-diamond family

struct Q2Report {
  GridFunction1D F;                    // F(s) = mu(diamond(s,s,1,1)) / 4
  Rational max_residual = Rational(0); // description residual over the grid
};

// For an even valuation, extracts F with
//   mu(diamond(a,b,c,d)) = F(ac) + F(bc) + F(ad) + F(bd)
// where diamond(a,b,c,d) = conv{-a e1, b e1, -c e2, d e2}, and reports the
// worst residual of that description over grid^4. Evenness under both
// coordinate reflections is verified first (NotEven).
Q2Report extract_F_on_Q2(const ValuationSpec& spec,
                         const std::vector<Rational>& grid);

// ---------------------------------------------------------------------------
// Full planar descriptor fit

struct R2Report {
  Rational k = Rational(0);  // coefficient of (1/b^2 - 1/a^2)(x + y)
  Rational c1 = Rational(0); // F(r) = c1/r + c2 + c3 r
  Rational c2 = Rational(0);
  Rational c3 = Rational(0);
  Rational max_fit_residual = Rational(0);    // F vs fit at held-out points
  Rational max_family_residual = Rational(0); // apex quads vs reconstruction
  bool c1_matches_minus_2k = false;
};

// Fits the planar descriptor (k, F) with F(r) = c1/r + c2 + c3*r from exact
// evaluations: k from the slant-linear part on apex quadrilaterals, F from
// symmetric diamonds, coefficients from a 3x3 exact solve at r in {1/2,1,2},
// residuals at held-out r in {1/4,4} and on slanted quadrilaterals.
R2Report fit_R2_descriptor(const ValuationSpec& spec);

// ---------------------------------------------------------------------------
// Odd-part annihilation on a lattice

struct AnnihilationReport {
  Rational max_recurrence_residual = Rational(0);
  Rational max_independence_residual = Rational(0);
  bool all_cells_zero = false;
  bool forced_zero = false;
  std::size_t recurrences_checked = 0;
};

// For an antisymmetric lattice table G with G(.,0) = G(0,.) = G(x,-x) = 0,
// the two recurrences
//   G(kx, lx)  = G((k-1)x, (l+1)x)  - G(-x, (l+1)x)  - G((k-1)x, x)
//   G(kx, -lx) = G((k-1)x, -(l-1)x) - G(-x, -(l-1)x) - G((k-1)x, x)
// force G = 0 on the whole lattice by induction over max(k, l). This check
// replays that induction on the table (for both base steps +-unit), records
// the worst recurrence residual, probes the r-independence of
//   G(b+r, d-r) - G(a+r, d-r) - G(b+r, c-r) + G(a+r, c-r),
// and reports whether the table is exactly zero. Preconditions (antisymmetry
// and the boundary vanishing above; complete cell coverage for
// |k|,|l| <= kmax) throw PreconditionViolated.
AnnihilationReport odd_grid_annihilation(const GridFunction2D& G,
                                         const Rational& unit, int kmax);

// Lattice table of the odd part (axis-0 reflection) of a valuation on the
// diamond family: G(k*unit, l*unit) = mu_minus(diamond(1, 2^k, 1, 2^l)).
GridFunction2D odd_table_from_valuation(const ValuationSpec& spec, int kmax,
                                        const Rational& unit);

} // namespace cvgeo

#endif
