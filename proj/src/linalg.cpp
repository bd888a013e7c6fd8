/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "normalgeom/linalg.hpp"

namespace ng {

Vec3 make_vec3(FieldSpec f, long a, long b, long c) { return {Scalar(f, a), Scalar(f, b), Scalar(f, c)}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Scalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero_vec(const Vec3& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

bool proportional(const Vec3& a, const Vec3& b) { return is_zero_vec(cross(a, b)); }

Vec3 mat_vec(const Mat3& m, const Vec3& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

Mat3 transpose(const Mat3& m) {
  Mat3 t = m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 bt = transpose(b);
  Mat3 r = a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = dot(a[i], bt[j]);
  return r;
}

Scalar det3(const Mat3& m) { return dot(m[0], cross(m[1], m[2])); }

Mat3 inverse3(const Mat3& m) {
  const Scalar d = det3(m);
  if (d.is_zero()) throw Error(Errc::degenerate, "singular 3x3 matrix");
  const Scalar inv = d.inverse();
  // rows of the inverse are columns of the cofactor matrix
  Mat3 cof = {cross(m[1], m[2]), cross(m[2], m[0]), cross(m[0], m[1])};
  Mat3 r = transpose(cof);
  for (auto& row : r)
    for (auto& v : row) v *= inv;
  return r;
}

Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  return {Vec3{c0[0], c1[0], c2[0]}, Vec3{c0[1], c1[1], c2[1]}, Vec3{c0[2], c1[2], c2[2]}};
}

std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Scalar inv = m[row][col].inverse();
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Scalar factor = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) {
        if (!m[row][j].is_zero()) m[i][j] -= factor * m[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Scalar>> kernel(Matrix m, std::size_t ncols, FieldSpec f) {
  const auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(ncols, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ng
