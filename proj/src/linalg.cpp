#include "cvgeo/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace cvgeo {

Rational dot(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const RatVec& a, const Rational& s) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RatVec mat_vec(const RatMat& m, const RatVec& x) {
  RatVec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
  return r;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat r(n, RatVec(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat r(m[0].size(), RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
  return r;
}

RatMat identity_mat(std::size_t n) {
  RatMat m(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Rational determinant(RatMat m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv_p = Rational(1) / m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] * inv_p;
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return det;
}

std::optional<RatMat> inverse(const RatMat& m) {
  std::size_t n = m.size();
  RatMat a = m;
  RatMat inv = identity_mat(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<RatVec> solve(RatMat m, RatVec rhs) {
  std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational p = m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / p;
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  RatVec x(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
    x[i] = s / m[i][i];
  }
  return x;
}

std::size_t rank(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  RatMat m = rows;
  std::size_t nc = m[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < nc && r < m.size(); ++col) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    Rational p = m[r][col];
    for (std::size_t row = r + 1; row < m.size(); ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / p;
      for (std::size_t j = col; j < nc; ++j) m[row][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t affine_rank(const std::vector<RatVec>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<RatVec> diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return rank(diffs);
}

RatVec hyperplane_normal(const std::vector<RatVec>& pts) {
  std::size_t d = pts[0].size();
  if (pts.size() != d) throw std::invalid_argument("hyperplane_normal: need d points in R^d");
  // rows: d-1 difference vectors; normal_i = (-1)^i * minor_i
  RatMat diffs(d - 1, RatVec(d));
  for (std::size_t i = 0; i + 1 < d; ++i) diffs[i] = sub(pts[i + 1], pts[0]);
  RatVec normal(d);
  for (std::size_t drop = 0; drop < d; ++drop) {
    RatMat minor(d - 1, RatVec(d - 1));
    for (std::size_t i = 0; i + 1 < d; ++i) {
      std::size_t cj = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == drop) continue;
        minor[i][cj++] = diffs[i][j];
      }
    }
    Rational det = (d == 1) ? Rational(1) : determinant(minor);
    normal[drop] = (drop % 2 == 0) ? det : -det;
  }
  return normal;
}

} // namespace cvgeo
