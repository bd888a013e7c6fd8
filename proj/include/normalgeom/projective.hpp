/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>

#include "normalgeom/linalg.hpp"
#include "normalgeom/poly.hpp"

namespace ng {

/// Which plane a coordinate triple lives in: PV or its dual.
enum class Space { primal, dual };

/// Nonzero triple up to scale. Stored unreduced; equality compares minors.
class ProjectivePoint {
 public:
  ProjectivePoint(Vec3 c, Space s = Space::primal);
  const Vec3& coords() const noexcept { return c_; }
  Space space() const noexcept { return space_; }
  FieldSpec field() const { return c_[0].field(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  /// Same triple scaled so the last nonzero coordinate is 1 (for printing).
  ProjectivePoint normalized() const;
  std::string to_string() const;
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  Vec3 c_;
  Space space_;
};

/// Line a0*x + a1*y + a2*z = 0 with coefficients up to scale.
class ProjectiveLine {
 public:
  ProjectiveLine(Vec3 c, Space s = Space::primal);
  const Vec3& coeffs() const noexcept { return c_; }
  Space space() const noexcept { return space_; }
  FieldSpec field() const { return c_[0].field(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  bool contains(const ProjectivePoint& p) const;
  /// The line's coefficients as a point of the opposite plane.
  ProjectivePoint dual_point() const;
  /// Two distinct points spanning the line.
  std::array<Vec3, 2> basis() const;
  ProjectiveLine normalized() const;
  std::string to_string() const;
  friend bool operator==(const ProjectiveLine& a, const ProjectiveLine& b);

 private:
  Vec3 c_;
  Space space_;
};

ProjectiveLine join(const ProjectivePoint& p, const ProjectivePoint& q);
ProjectivePoint meet(const ProjectiveLine& l, const ProjectiveLine& m);
/// Line of the primal plane whose coordinates are the given dual point.
ProjectiveLine line_from_dual(const ProjectivePoint& u);

/// A line at infinity together with a quadratic form, nondegenerate on that
/// line, which defines orthogonality of directions.
class MetricStructure {
 public:
  /// q is a ternary quadratic form; only its restriction to h_inf matters.
  MetricStructure(ProjectiveLine h_inf, const MultiPoly& q);
  /// z = 0 with x^2 + y^2.
  static MetricStructure euclidean(FieldSpec f);

  const ProjectiveLine& h_inf() const noexcept { return h_; }
  /// Symmetric matrix with q(v) = v^T Q v.
  const Mat3& q_matrix() const noexcept { return q_; }
  const MultiPoly& q_form() const noexcept { return q_poly_; }
  FieldSpec field() const { return h_.field(); }

  Scalar bilinear(const Vec3& a, const Vec3& b) const;
  /// Orthogonal of a point of h_inf, inside h_inf.
  ProjectivePoint perp(const ProjectivePoint& a) const;
  /// Unchecked linear form of perp: v -> h x (Q v); agrees with perp on h_inf.
  Vec3 perp_vector(const Vec3& v) const;
  /// Same metric over F_p.
  MetricStructure reduce_mod(FieldSpec target) const;

  /// Testing hook: perp becomes (a:b) -> (b:a+b) in a basis of h_inf.
  MetricStructure with_broken_perp() const;
  bool broken() const noexcept { return broken_; }

 private:
  ProjectiveLine h_;
  MultiPoly q_poly_;
  Mat3 q_;
  bool broken_ = false;
};

/// A projective linear map x -> A x of PV and its action on lines
/// u -> A^{-T} u, so that incidence is preserved.
struct Projectivity {
  Mat3 a;
  Mat3 a_inv;

  explicit Projectivity(const Mat3& m);
  Vec3 apply_point(const Vec3& p) const { return mat_vec(a, p); }
  Vec3 apply_line(const Vec3& u) const { return mat_vec(transpose(a_inv), u); }
  /// F o A^{-1}: the equation of the image curve.
  MultiPoly push_forward(const MultiPoly& f) const;
  /// F o A.
  MultiPoly pull_back(const MultiPoly& f) const;
};

/// Linear substitution x_i -> sum_j m[i][j] x_j in a ternary polynomial.
MultiPoly substitute_linear(const MultiPoly& f, const Mat3& m);

/// Random map fixing h_inf and scaling Q on it: rotation-like similarity
/// plus translation in the affine chart of h_inf.
Projectivity random_isometry(const MetricStructure& m, Rng& rng);

}  // namespace ng
