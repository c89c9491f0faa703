#include "cvgeo/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cvgeo {

namespace {

bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

RatVec centroid(const std::vector<RatVec>& pts) {
  RatVec c(pts[0].size(), Rational(0));
  for (const auto& p : pts) c = add(c, p);
  const Rational k(static_cast<long>(pts.size()));
  for (auto& x : c) x /= k;
  return c;
}

std::vector<uint32_t> sorted_intersection(const std::vector<uint32_t>& a,
                                          const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Rational factorial_of(std::size_t n) {
  Rational f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= Rational(static_cast<long>(i));
  return f;
}

// ---------------------------------------------------------------------
// Incremental hull: facets maintained as <normal, x> <= rhs with vertex
// lists that are complete (every current hull vertex lying on the facet
// hyperplane is listed) but not necessarily minimal; a final pass keeps
// exactly the points whose incident facet normals span the space.
// ---------------------------------------------------------------------

struct HullFacet {
  RatVec normal;
  Rational rhs;
  std::vector<uint32_t> verts; // sorted ids into the point array
};

struct RawHull {
  std::size_t dim = 0;
  std::vector<RatVec> points; // deduplicated, lex-sorted input
  std::vector<HullFacet> facets;
};

// Greedy affinely independent subset of target_count points.
std::vector<RatVec> pick_affine_basis(const std::vector<RatVec>& pts,
                                      std::size_t target_count) {
  std::vector<RatVec> sel;
  for (const auto& p : pts) {
    std::vector<RatVec> trial = sel;
    trial.push_back(p);
    if (affine_rank(trial) == sel.size()) sel = std::move(trial);
    if (sel.size() == target_count) break;
  }
  return sel;
}

RawHull hull_core(std::vector<RatVec> pts) {
  if (pts.empty()) throw DegenerateInput("hull of an empty point set");
  const std::size_t d = pts[0].size();
  if (d == 0) throw DegenerateInput("points have dimension zero");
  for (const auto& p : pts) {
    if (p.size() != d) throw DegenerateInput("points of mixed dimension");
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  RawHull raw;
  raw.dim = d;
  raw.points = pts;

  if (d == 1) {
    if (pts.size() < 2) throw DegenerateInput("hull is a single point");
    const uint32_t lo = 0;
    const uint32_t hi = static_cast<uint32_t>(pts.size() - 1);
    raw.facets.push_back({{Rational(-1)}, -pts[lo][0], {lo}});
    raw.facets.push_back({{Rational(1)}, pts[hi][0], {hi}});
    return raw;
  }

  // Initial full-dimensional simplex, greedily from the lex order.
  std::vector<uint32_t> base;
  std::vector<RatVec> basePts;
  for (uint32_t i = 0; i < pts.size() && basePts.size() < d + 1; ++i) {
    std::vector<RatVec> trial = basePts;
    trial.push_back(pts[i]);
    if (affine_rank(trial) == basePts.size()) {
      basePts = std::move(trial);
      base.push_back(i);
    }
  }
  if (basePts.size() != d + 1) {
    throw DegenerateInput("points do not span the ambient space");
  }
  const RatVec ref = centroid(basePts); // strictly interior forever

  std::vector<HullFacet> facets;
  for (std::size_t drop = 0; drop <= d; ++drop) {
    std::vector<RatVec> side;
    std::vector<uint32_t> ids;
    for (std::size_t k = 0; k <= d; ++k) {
      if (k == drop) continue;
      side.push_back(basePts[k]);
      ids.push_back(base[k]);
    }
    RatVec nrm = hyperplane_normal(side);
    Rational rhs = dot(nrm, side[0]);
    const Rational at_ref = dot(nrm, ref);
    if (at_ref == rhs) throw GeomError("internal: reference on facet plane");
    if (at_ref > rhs) {
      for (auto& x : nrm) x = -x;
      rhs = -rhs;
    }
    std::sort(ids.begin(), ids.end());
    facets.push_back({std::move(nrm), std::move(rhs), std::move(ids)});
  }

  std::vector<bool> inBase(pts.size(), false);
  for (uint32_t b : base) inBase[b] = true;

  for (uint32_t idx = 0; idx < pts.size(); ++idx) {
    if (inBase[idx]) continue;
    const RatVec& p = pts[idx];

    std::vector<int> state(facets.size());
    bool anyBeyond = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      const Rational s = dot(facets[f].normal, p) - facets[f].rhs;
      state[f] = (s > 0) ? 1 : (s < 0 ? -1 : 0);
      anyBeyond |= state[f] == 1;
    }
    if (!anyBeyond) continue; // p inside the current hull

    // New facets from horizon ridges between visible and hidden facets.
    std::vector<HullFacet> fresh;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (state[f] != 1) continue;
      for (std::size_t g = 0; g < facets.size(); ++g) {
        if (state[g] != -1) continue;
        std::vector<uint32_t> common =
            sorted_intersection(facets[f].verts, facets[g].verts);
        if (common.size() < d - 1) continue;
        std::vector<RatVec> commonPts;
        commonPts.reserve(common.size());
        for (uint32_t c : common) commonPts.push_back(pts[c]);
        if (affine_rank(commonPts) != d - 2) continue;

        std::vector<RatVec> span = pick_affine_basis(commonPts, d - 1);
        span.push_back(p);
        RatVec nrm = hyperplane_normal(span);
        Rational rhs = dot(nrm, p);
        const Rational at_ref = dot(nrm, ref);
        if (at_ref == rhs) throw GeomError("internal: reference on new facet");
        if (at_ref > rhs) {
          for (auto& x : nrm) x = -x;
          rhs = -rhs;
        }
        std::vector<uint32_t> ids = common;
        ids.insert(std::lower_bound(ids.begin(), ids.end(), idx), idx);
        fresh.push_back({std::move(nrm), std::move(rhs), std::move(ids)});
      }
    }

    bool anyOn = false;
    std::vector<HullFacet> kept;
    kept.reserve(facets.size() + fresh.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (state[f] == 1) continue; // visible: discarded
      HullFacet keep = std::move(facets[f]);
      if (state[f] == 0) { // coplanar: facet absorbs the point
        anyOn = true;
        keep.verts.insert(
            std::lower_bound(keep.verts.begin(), keep.verts.end(), idx), idx);
      }
      kept.push_back(std::move(keep));
    }
    if (fresh.empty() && !anyOn) {
      throw GeomError("internal: exterior point saw no horizon");
    }
    for (auto& nf : fresh) kept.push_back(std::move(nf));
    facets = std::move(kept);
  }

  raw.facets = std::move(facets);
  return raw;
}

struct HullParts {
  std::size_t dim = 0;
  std::vector<RatVec> vertices; // lex-sorted, minimal
  std::vector<Polytope::Facet> facets;
};

// Keep exactly the points whose incident facet normals span R^d, then
// renumber. Points absorbed into a facet's relative interior fail the
// rank test and drop out here.
HullParts finalize_hull(const RawHull& raw) {
  const std::size_t d = raw.dim;
  std::vector<std::vector<const RatVec*>> normalsAt(raw.points.size());
  std::vector<bool> listed(raw.points.size(), false);
  for (const auto& f : raw.facets) {
    for (uint32_t v : f.verts) {
      normalsAt[v].push_back(&f.normal);
      listed[v] = true;
    }
  }
  std::vector<uint32_t> remap(raw.points.size(), UINT32_MAX);
  HullParts parts;
  parts.dim = d;
  for (std::size_t v = 0; v < raw.points.size(); ++v) {
    if (!listed[v]) continue;
    std::vector<RatVec> nrms;
    nrms.reserve(normalsAt[v].size());
    for (const RatVec* n : normalsAt[v]) nrms.push_back(*n);
    if (rank(nrms) != d) continue;
    remap[v] = static_cast<uint32_t>(parts.vertices.size());
    parts.vertices.push_back(raw.points[v]);
  }
  for (const auto& f : raw.facets) {
    Polytope::Facet out;
    out.normal = f.normal;
    for (uint32_t v : f.verts) {
      if (remap[v] != UINT32_MAX) out.vertex_ids.push_back(remap[v]);
    }
    parts.facets.push_back(std::move(out));
  }
  return parts;
}

} // namespace

// --- Hyperplane / LinearMap ----------------------------------------------

Hyperplane::Hyperplane(RatVec n, Rational off)
    : normal(std::move(n)), offset(std::move(off)) {
  if (is_zero(normal)) throw DegenerateInput("hyperplane with zero normal");
}

LinearMap::LinearMap(RatMat m) : mat_(std::move(m)) {
  const std::size_t n = mat_.size();
  if (n == 0) throw DegenerateInput("empty matrix");
  for (const auto& row : mat_) {
    if (row.size() != n) throw DegenerateInput("matrix not square");
  }
  det_ = determinant(mat_);
  if (det_ == 0) throw SingularMatrix();
  unimodular_ = det_ == 1;
}

LinearMap LinearMap::inverse() const {
  auto inv = cvgeo::inverse(mat_);
  if (!inv) throw SingularMatrix();
  return LinearMap(std::move(*inv));
}

RatMat LinearMap::inverse_transpose() const {
  auto inv = cvgeo::inverse(mat_);
  if (!inv) throw SingularMatrix();
  return transpose(*inv);
}

LinearMap LinearMap::reflection(std::size_t n, std::size_t axis) {
  if (axis >= n) throw ParamOutOfDomain("reflection axis out of range");
  RatMat m = identity_mat(n);
  m[axis][axis] = Rational(-1);
  return LinearMap(std::move(m));
}

LinearMap LinearMap::scaling(std::size_t n, const Rational& t) {
  if (t == 0) throw SingularMatrix();
  RatMat m = identity_mat(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = t;
  return LinearMap(std::move(m));
}

LinearMap LinearMap::shear(std::size_t n, std::size_t row, std::size_t col,
                           const Rational& lambda) {
  if (row >= n || col >= n || row == col) {
    throw ParamOutOfDomain("shear indices out of range");
  }
  RatMat m = identity_mat(n);
  m[row][col] = lambda;
  return LinearMap(std::move(m));
}

// --- Polytope construction & invariants ----------------------------------

Polytope Polytope::from_points(const std::vector<RatVec>& points) {
  const RawHull raw = hull_core(points);
  HullParts parts = finalize_hull(raw); // same facet order as raw
  std::vector<Facet> facets;
  facets.reserve(parts.facets.size());
  // Normalize each facet to <a, x> <= 1; possible only with 0 interior.
  for (std::size_t f = 0; f < parts.facets.size(); ++f) {
    const Rational& rhs = raw.facets[f].rhs;
    if (rhs <= 0) throw OriginNotInterior();
    Facet out = std::move(parts.facets[f]);
    for (auto& x : out.normal) x /= rhs;
    facets.push_back(std::move(out));
  }
  return from_parts(parts.dim, std::move(parts.vertices), std::move(facets));
}

Polytope Polytope::from_parts(std::size_t dim, std::vector<RatVec> vertices,
                              std::vector<Facet> facets) {
  // Canonical order: vertices lex, facets lex by normal.
  std::vector<uint32_t> perm(vertices.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](uint32_t a, uint32_t b) {
    return lex_less(vertices[a], vertices[b]);
  });
  std::vector<uint32_t> inv(vertices.size());
  std::vector<RatVec> sortedVerts(vertices.size());
  for (uint32_t newId = 0; newId < perm.size(); ++newId) {
    inv[perm[newId]] = newId;
    sortedVerts[newId] = std::move(vertices[perm[newId]]);
  }
  for (auto& f : facets) {
    for (auto& id : f.vertex_ids) {
      if (id >= sortedVerts.size()) {
        throw DegenerateInput("facet references a missing vertex");
      }
      id = inv[id];
    }
    std::sort(f.vertex_ids.begin(), f.vertex_ids.end());
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    return lex_less(a.normal, b.normal);
  });

  Polytope P;
  P.dim_ = dim;
  P.vertices_ = std::move(sortedVerts);
  P.facets_ = std::move(facets);
  P.validate();
  return P;
}

void Polytope::validate() const {
  const std::size_t d = dim_;
  if (d == 0) throw DegenerateInput("dimension zero");
  if (vertices_.size() < d + 1 || facets_.size() < d + 1) {
    if (d == 1) {
      if (vertices_.size() != 2 || facets_.size() != 2) {
        throw DegenerateInput("segment needs two vertices and two facets");
      }
    } else {
      throw DegenerateInput("too few vertices or facets");
    }
  }
  for (const auto& v : vertices_) {
    if (v.size() != d) throw DegenerateInput("vertex of wrong dimension");
  }
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[i + 1]) {
      throw DegenerateInput("duplicate vertex");
    }
  }
  for (std::size_t i = 0; i + 1 < facets_.size(); ++i) {
    if (facets_[i].normal == facets_[i + 1].normal) {
      throw DegenerateInput("duplicate facet");
    }
  }
  if (affine_rank(vertices_) != d) {
    throw DegenerateInput("polytope is not full-dimensional");
  }

  std::vector<std::vector<RatVec>> normalsAtVertex(vertices_.size());
  for (const auto& f : facets_) {
    if (f.normal.size() != d) throw DegenerateInput("normal of wrong dimension");
    std::vector<bool> onFacet(vertices_.size(), false);
    for (std::size_t k = 0; k < f.vertex_ids.size(); ++k) {
      if (k > 0 && f.vertex_ids[k - 1] >= f.vertex_ids[k]) {
        throw DegenerateInput("facet incidence not sorted");
      }
      if (f.vertex_ids[k] >= vertices_.size()) {
        throw DegenerateInput("facet references a missing vertex");
      }
      onFacet[f.vertex_ids[k]] = true;
    }
    std::vector<RatVec> touching;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      const Rational s = dot(f.normal, vertices_[v]);
      if (s > 1) throw DegenerateInput("vertex outside a facet inequality");
      if ((s == 1) != onFacet[v]) {
        throw DegenerateInput("facet incidence list is wrong");
      }
      if (s == 1) {
        touching.push_back(vertices_[v]);
        normalsAtVertex[v].push_back(f.normal);
      }
    }
    if (affine_rank(touching) != d - 1) {
      throw DegenerateInput("inequality does not support a facet");
    }
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (rank(normalsAtVertex[v]) != d) {
      throw DegenerateInput("listed point is not a vertex");
    }
  }
}

// --- queries ---------------------------------------------------------------

bool Polytope::contains(const RatVec& x) const {
  for (const auto& f : facets_) {
    if (dot(f.normal, x) > 1) return false;
  }
  return true;
}

Rational Polytope::support(const RatVec& dir) const {
  Rational best = dot(dir, vertices_[0]);
  for (std::size_t v = 1; v < vertices_.size(); ++v) {
    const Rational s = dot(dir, vertices_[v]);
    if (s > best) best = s;
  }
  return best;
}

double Polytope::support(const std::vector<double>& dir) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) {
    double s = 0.0;
    for (std::size_t i = 0; i < dir.size(); ++i) s += dir[i] * to_double(v[i]);
    best = std::max(best, s);
  }
  return best;
}

std::pair<Rational, Rational> Polytope::line_interval(const RatVec& u) const {
  if (is_zero(u)) throw DegenerateInput("line direction is zero");
  bool haveLo = false, haveHi = false;
  Rational lo, hi;
  for (const auto& f : facets_) {
    const Rational c = dot(f.normal, u); // c*t <= 1
    if (c > 0) {
      const Rational bound = 1 / c;
      if (!haveHi || bound < hi) hi = bound, haveHi = true;
    } else if (c < 0) {
      const Rational bound = 1 / c;
      if (!haveLo || bound > lo) lo = bound, haveLo = true;
    }
  }
  if (!haveLo || !haveHi) throw GeomError("internal: unbounded line section");
  return {lo, hi};
}

std::vector<std::pair<uint32_t, uint32_t>> Polytope::edges() const {
  const std::size_t d = dim_;
  std::vector<std::vector<uint32_t>> facetsAt(vertices_.size());
  for (uint32_t f = 0; f < facets_.size(); ++f) {
    for (uint32_t v : facets_[f].vertex_ids) facetsAt[v].push_back(f);
  }
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t i = 0; i < vertices_.size(); ++i) {
    for (uint32_t j = i + 1; j < vertices_.size(); ++j) {
      std::vector<uint32_t> common =
          sorted_intersection(facetsAt[i], facetsAt[j]);
      if (common.size() + 1 < d) continue;
      std::vector<RatVec> nrms;
      nrms.reserve(common.size());
      for (uint32_t f : common) nrms.push_back(facets_[f].normal);
      if (rank(nrms) == d - 1) out.emplace_back(i, j);
    }
  }
  return out;
}

bool operator==(const Polytope& a, const Polytope& b) {
  if (a.dim_ != b.dim_ || a.vertices_ != b.vertices_ ||
      a.facets_.size() != b.facets_.size()) {
    return false;
  }
  for (std::size_t f = 0; f < a.facets_.size(); ++f) {
    if (a.facets_[f].normal != b.facets_[f].normal) return false;
    if (a.facets_[f].vertex_ids != b.facets_[f].vertex_ids) return false;
  }
  return true;
}

// --- core operations --------------------------------------------------------

Polytope convex_hull(const std::vector<RatVec>& points) {
  return Polytope::from_points(points);
}

Polytope polar(const Polytope& P) {
  const auto& verts = P.vertices();
  const auto& facets = P.facets();
  std::vector<RatVec> dualVerts;
  dualVerts.reserve(facets.size());
  for (const auto& f : facets) dualVerts.push_back(f.normal);

  std::vector<Polytope::Facet> dualFacets(verts.size());
  for (std::size_t j = 0; j < verts.size(); ++j) {
    dualFacets[j].normal = verts[j];
  }
  for (uint32_t i = 0; i < facets.size(); ++i) {
    for (uint32_t j : facets[i].vertex_ids) {
      dualFacets[j].vertex_ids.push_back(i);
    }
  }
  return Polytope::from_parts(P.dim(), std::move(dualVerts),
                              std::move(dualFacets));
}

namespace {

// Fan triangulation of a set of extreme points spanning a k-flat in R^n:
// project injectively onto k coordinates, hull there, fan from the first
// vertex over the sub-facets avoiding it. Emits (k+1)-point simplices in
// the original coordinates.
void triangulate_flat(const std::vector<RatVec>& pts, std::size_t k,
                      std::vector<std::vector<RatVec>>& out) {
  if (k == 0) {
    out.push_back({pts[0]});
    return;
  }
  if (k == 1) {
    if (pts.size() != 2) throw GeomError("internal: edge without 2 endpoints");
    out.push_back({pts[0], pts[1]});
    return;
  }
  const std::size_t n = pts[0].size();
  std::vector<RatVec> diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));

  // Greedy choice of k coordinates on which the flat projects injectively.
  std::vector<std::size_t> cols;
  std::vector<RatVec> colVecs;
  for (std::size_t c = 0; c < n && cols.size() < k; ++c) {
    RatVec col(diffs.size());
    for (std::size_t r = 0; r < diffs.size(); ++r) col[r] = diffs[r][c];
    std::vector<RatVec> trial = colVecs;
    trial.push_back(col);
    if (rank(trial) == cols.size() + 1) {
      colVecs = std::move(trial);
      cols.push_back(c);
    }
  }
  if (cols.size() != k) throw GeomError("internal: flat projection failed");

  std::map<RatVec, const RatVec*, bool (*)(const RatVec&, const RatVec&)>
      back(lex_less);
  std::vector<RatVec> proj;
  proj.reserve(pts.size());
  for (const auto& p : pts) {
    RatVec q(k);
    for (std::size_t i = 0; i < k; ++i) q[i] = p[cols[i]];
    back[q] = &p;
    proj.push_back(std::move(q));
  }

  HullParts sub = finalize_hull(hull_core(proj));
  const RatVec& apexProj = sub.vertices[0];
  const RatVec& apex = *back.at(apexProj);
  for (const auto& f : sub.facets) {
    bool hasApex = false;
    std::vector<RatVec> facePts;
    facePts.reserve(f.vertex_ids.size());
    for (uint32_t id : f.vertex_ids) {
      if (id == 0) { hasApex = true; break; }
      facePts.push_back(*back.at(sub.vertices[id]));
    }
    if (hasApex) continue;
    std::vector<std::vector<RatVec>> faceSimplices;
    triangulate_flat(facePts, k - 1, faceSimplices);
    for (auto& s : faceSimplices) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

// All maximal simplices of the origin-fan of P: each has dim(P) boundary
// points; together with the origin they partition P.
std::vector<std::vector<RatVec>> origin_fan(const Polytope& P) {
  std::vector<std::vector<RatVec>> out;
  const std::size_t d = P.dim();
  for (const auto& f : P.facets()) {
    std::vector<RatVec> pts;
    pts.reserve(f.vertex_ids.size());
    for (uint32_t id : f.vertex_ids) pts.push_back(P.vertices()[id]);
    triangulate_flat(pts, d - 1, out);
  }
  return out;
}

Rational simplex_det(const std::vector<RatVec>& pts) {
  RatMat m;
  m.reserve(pts.size());
  for (const auto& p : pts) m.push_back(p);
  return determinant(m);
}

} // namespace

Rational volume(const Polytope& P) {
  const std::size_t d = P.dim();
  if (d == 1) return P.vertices()[1][0] - P.vertices()[0][0];
  Rational total(0);
  for (const auto& s : origin_fan(P)) total += abs(simplex_det(s));
  return total / factorial_of(d);
}

RatVec moment_vector_of_polar(const Polytope& P) {
  const Polytope Q = polar(P);
  const std::size_t d = Q.dim();
  RatVec m(d, Rational(0));
  if (d == 1) {
    const Rational lo = Q.vertices()[0][0], hi = Q.vertices()[1][0];
    m[0] = (hi * hi - lo * lo) / 2;
    return m;
  }
  const Rational dfact = factorial_of(d);
  const Rational dp1(static_cast<long>(d + 1));
  for (const auto& s : origin_fan(Q)) {
    const Rational vol = abs(simplex_det(s)) / dfact;
    RatVec c(d, Rational(0));
    for (const auto& w : s) c = add(c, w);
    for (std::size_t i = 0; i < d; ++i) m[i] += vol * c[i] / dp1;
  }
  return m;
}

namespace {

Polytope clip_impl(const Polytope& P, const Hyperplane& H, int keepSign) {
  if (H.normal.size() != P.dim()) {
    throw DegenerateInput("hyperplane dimension mismatch");
  }
  const auto& verts = P.vertices();
  std::vector<Rational> side(verts.size());
  bool anyNeg = false, anyPos = false;
  for (std::size_t v = 0; v < verts.size(); ++v) {
    side[v] = dot(H.normal, verts[v]) - H.offset;
    anyNeg |= side[v] < 0;
    anyPos |= side[v] > 0;
  }
  if (!anyNeg || !anyPos) throw NoIntersection();

  std::vector<RatVec> keep;
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const bool wanted = keepSign < 0 ? side[v] <= 0 : side[v] >= 0;
    if (wanted) keep.push_back(verts[v]);
  }
  for (const auto& [i, j] : P.edges()) {
    if ((side[i] < 0 && side[j] > 0) || (side[i] > 0 && side[j] < 0)) {
      const Rational t = side[i] / (side[i] - side[j]);
      keep.push_back(add(verts[i], scale(sub(verts[j], verts[i]), t)));
    }
  }
  return Polytope::from_points(keep);
}

} // namespace

std::pair<Polytope, Polytope> split_by_hyperplane(const Polytope& P,
                                                  const Hyperplane& H) {
  if (H.normal.size() != P.dim()) {
    throw DegenerateInput("hyperplane dimension mismatch");
  }
  bool anyNeg = false, anyPos = false;
  for (const auto& v : P.vertices()) {
    const Rational s = dot(H.normal, v) - H.offset;
    anyNeg |= s < 0;
    anyPos |= s > 0;
  }
  if (!anyNeg || !anyPos) throw NoIntersection();
  if (H.offset == 0) {
    throw InvalidSplit("origin lies on the cutting hyperplane");
  }
  Polytope lower = [&] {
    try {
      return clip_impl(P, H, -1);
    } catch (const OriginNotInterior&) {
      throw InvalidSplit("origin not interior to the lower piece");
    }
  }();
  Polytope upper = [&] {
    try {
      return clip_impl(P, H, +1);
    } catch (const OriginNotInterior&) {
      throw InvalidSplit("origin not interior to the upper piece");
    }
  }();
  return {std::move(lower), std::move(upper)};
}

Polytope clip_to_halfspace(const Polytope& P, const Hyperplane& H,
                           bool keep_lower) {
  return clip_impl(P, H, keep_lower ? -1 : +1);
}

Polytope apply_linear(const Polytope& P, const LinearMap& A) {
  if (A.dim() != P.dim()) throw DegenerateInput("map dimension mismatch");
  const RatMat ait = A.inverse_transpose();
  std::vector<RatVec> verts;
  verts.reserve(P.vertices().size());
  for (const auto& v : P.vertices()) verts.push_back(A.apply(v));
  std::vector<Polytope::Facet> facets;
  facets.reserve(P.facets().size());
  for (const auto& f : P.facets()) {
    facets.push_back({mat_vec(ait, f.normal), f.vertex_ids});
  }
  return Polytope::from_parts(P.dim(), std::move(verts), std::move(facets));
}

Polytope intersect(const Polytope& P, const Polytope& Q) {
  if (P.dim() != Q.dim()) throw DegenerateInput("dimension mismatch");
  std::vector<RatVec> duals;
  duals.reserve(P.facets().size() + Q.facets().size());
  for (const auto& f : P.facets()) duals.push_back(f.normal);
  for (const auto& f : Q.facets()) duals.push_back(f.normal);
  return polar(Polytope::from_points(duals));
}

Polytope convex_union(const Polytope& P, const Polytope& Q) {
  if (P.dim() != Q.dim()) throw DegenerateInput("dimension mismatch");
  std::vector<RatVec> pts = P.vertices();
  pts.insert(pts.end(), Q.vertices().begin(), Q.vertices().end());
  return Polytope::from_points(pts);
}

// --- special families --------------------------------------------------------

Polytope make_interval_hull(const std::vector<Rational>& neg,
                            const std::vector<Rational>& pos) {
  const std::size_t n = neg.size();
  if (n == 0 || pos.size() != n) {
    throw ParamOutOfDomain("need matching nonempty scale lists");
  }
  std::vector<RatVec> pts;
  pts.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    if (neg[k] <= 0 || pos[k] <= 0) {
      throw ParamOutOfDomain("interval scales must be positive");
    }
    RatVec lo(n, Rational(0)), hi(n, Rational(0));
    lo[k] = -neg[k];
    hi[k] = pos[k];
    pts.push_back(std::move(lo));
    pts.push_back(std::move(hi));
  }
  return Polytope::from_points(pts);
}

Polytope make_apex_quad(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d, const Rational& x,
                        const Rational& y) {
  if (a <= 0 || b <= 0 || c <= 0 || d <= 0) {
    throw ParamOutOfDomain("quadrilateral scales must be positive");
  }
  const std::vector<RatVec> pts = {
      {-a, Rational(0)}, {b, Rational(0)}, {c * x, -c}, {d * y, d}};
  Polytope P = Polytope::from_points(pts);
  const auto [lo, hi] = P.line_interval({Rational(1), Rational(0)});
  if (lo != -a || hi != b) {
    throw ClassViolation("x-axis section does not match the base interval");
  }
  return P;
}

Polytope make_double_pyramid(const Polytope& base, const Rational& a,
                             const Rational& b) {
  if (a <= 0 || b <= 0) throw ParamOutOfDomain("apex heights must be positive");
  const std::size_t n = base.dim() + 1;
  std::vector<RatVec> pts;
  pts.reserve(base.vertices().size() + 2);
  for (const auto& v : base.vertices()) {
    RatVec w = v;
    w.push_back(Rational(0));
    pts.push_back(std::move(w));
  }
  RatVec lo(n, Rational(0)), hi(n, Rational(0));
  lo[n - 1] = -a;
  hi[n - 1] = b;
  pts.push_back(std::move(lo));
  pts.push_back(std::move(hi));
  return Polytope::from_points(pts);
}

Polytope product_with_interval(const Polytope& base, const Rational& lo,
                               const Rational& hi) {
  if (lo >= 0 || hi <= 0) {
    throw ParamOutOfDomain("interval must straddle zero");
  }
  const std::size_t m = base.vertices().size();
  const std::size_t n = base.dim() + 1;
  std::vector<RatVec> verts;
  verts.reserve(2 * m);
  for (const auto& v : base.vertices()) {
    RatVec w = v;
    w.push_back(lo);
    verts.push_back(std::move(w));
  }
  for (const auto& v : base.vertices()) {
    RatVec w = v;
    w.push_back(hi);
    verts.push_back(std::move(w));
  }
  std::vector<Polytope::Facet> facets;
  facets.reserve(base.facets().size() + 2);
  for (const auto& f : base.facets()) {
    Polytope::Facet side;
    side.normal = f.normal;
    side.normal.push_back(Rational(0));
    side.vertex_ids = f.vertex_ids;
    for (uint32_t id : f.vertex_ids) {
      side.vertex_ids.push_back(id + static_cast<uint32_t>(m));
    }
    facets.push_back(std::move(side));
  }
  Polytope::Facet bottom, top;
  bottom.normal.assign(n, Rational(0));
  bottom.normal[n - 1] = 1 / lo;
  top.normal.assign(n, Rational(0));
  top.normal[n - 1] = 1 / hi;
  for (uint32_t id = 0; id < m; ++id) {
    bottom.vertex_ids.push_back(id);
    top.vertex_ids.push_back(id + static_cast<uint32_t>(m));
  }
  facets.push_back(std::move(bottom));
  facets.push_back(std::move(top));
  return Polytope::from_parts(n, std::move(verts), std::move(facets));
}

// --- probes -------------------------------------------------------------------

double support_gap(const Polytope& P, const Polytope& Q,
                   const std::vector<std::vector<double>>& directions) {
  if (P.dim() != Q.dim()) throw DegenerateInput("dimension mismatch");
  if (directions.empty()) throw EmptyDirections();
  double worst = 0.0;
  for (const auto& u : directions) {
    worst = std::max(worst, std::abs(P.support(u) - Q.support(u)));
  }
  return worst;
}

namespace {

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double unit_double(uint64_t bits) { return double(bits >> 11) * 0x1.0p-53; }

} // namespace

std::vector<std::vector<double>> sphere_directions(std::size_t dim,
                                                   std::size_t count) {
  if (dim < 2) throw ParamOutOfDomain("directions need dimension >= 2");
  if (count == 0) throw EmptyDirections();
  std::vector<std::vector<double>> out;
  out.reserve(count);
  constexpr double kPi = 3.14159265358979323846;
  if (dim == 2) {
    for (std::size_t k = 0; k < count; ++k) {
      const double th = 2.0 * kPi * double(k) / double(count);
      out.push_back({std::cos(th), std::sin(th)});
    }
    return out;
  }
  if (dim == 3) {
    constexpr double kGolden = 0.6180339887498949;
    for (std::size_t k = 0; k < count; ++k) {
      const double z = 1.0 - 2.0 * (double(k) + 0.5) / double(count);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = 2.0 * kPi * std::fmod(double(k) * kGolden, 1.0);
      out.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
    return out;
  }
  // Fixed-seed Gaussian directions, reproducible across platforms.
  uint64_t ctr = 0x5DEECE66DULL ^ (uint64_t(dim) << 32) ^ uint64_t(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<double> u(dim);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (std::size_t i = 0; i < dim; i += 2) {
        const double a = unit_double(mix64(++ctr));
        const double b = unit_double(mix64(++ctr));
        const double r = std::sqrt(-2.0 * std::log(a <= 0 ? 1e-300 : a));
        u[i] = r * std::cos(2.0 * kPi * b);
        if (i + 1 < dim) u[i + 1] = r * std::sin(2.0 * kPi * b);
      }
      for (double x : u) norm2 += x * x;
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : u) x *= inv;
    out.push_back(std::move(u));
  }
  return out;
}

} // namespace cvgeo
