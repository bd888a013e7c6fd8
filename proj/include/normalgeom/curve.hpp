/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <string_view>

#include "normalgeom/poly.hpp"
#include "normalgeom/projective.hpp"

namespace ng {

using PolyVec = std::array<MultiPoly, 3>;

/// A reduced plane curve F = 0 of degree d >= 2 in x, y, z.
class PlaneCurve {
 public:
  /// Throws on a non-homogeneous input, degree < 2, or repeated factors.
  explicit PlaneCurve(MultiPoly f);
  static PlaneCurve parse(std::string_view text, FieldSpec f);

  const MultiPoly& equation() const noexcept { return f_; }
  const PolyVec& gradient() const noexcept { return grad_; }
  int degree() const noexcept { return d_; }
  FieldSpec field() const { return f_.field(); }
  /// char = 0 or char > d.
  bool hypotheses_ok() const noexcept;

  Scalar value_at(const Vec3& p) const;
  Vec3 gradient_at(const Vec3& p) const;
  bool contains(const ProjectivePoint& p) const;
  /// On the curve with nonzero gradient.
  bool is_regular(const ProjectivePoint& p) const;
  /// Same curve over F_p; throws if the reduction drops degree or squarefreeness.
  PlaneCurve reduce_mod(FieldSpec target) const;
  std::string to_string() const { return f_.to_string(); }

 private:
  MultiPoly f_;
  PolyVec grad_;
  int d_ = 0;
};

/// Rejects curves containing the line at infinity.
void check_metric_compatible(const PlaneCurve& x, const MetricStructure& m);

/// Polynomial normal data: n(p) = h x Q(grad F x h) is the normal point and
/// psi(p) = p x n(p) the dual coordinates of the normal line.
struct NormalMap {
  PolyVec n;
  PolyVec psi;
};
NormalMap normal_map(const PlaneCurve& x, const MetricStructure& m);

ProjectiveLine tangent_line(const PlaneCurve& x, const ProjectivePoint& p);
ProjectivePoint normal_point(const PlaneCurve& x, const ProjectivePoint& p, const MetricStructure& m);
ProjectiveLine normal_line(const PlaneCurve& x, const ProjectivePoint& p, const MetricStructure& m);
int contact_order(const PlaneCurve& x, const ProjectivePoint& p);
int multiplicity_at(const PlaneCurve& x, const ProjectivePoint& q);
/// Point on every tangent line, found as the kernel of the partials'
/// coefficient matrix; none if the partials are independent.
std::optional<ProjectivePoint> strange_point(const PlaneCurve& x);
bool is_smooth(const PlaneCurve& x);
bool is_circular(const PlaneCurve& x, const MetricStructure& m);

/// Regular point, off h_inf, tangent != h_inf, and p != n(p).
bool is_general_point(const PlaneCurve& x, const ProjectivePoint& p, const MetricStructure& m);

struct PointSample {
  std::vector<ProjectivePoint> points;
  int rejected = 0;  // regular points discarded by the genericity test
  int lines_scanned = 0;
};
/// Distinct regular points over the base field, found by intersecting the
/// curve with random lines (over Q also chords through known points).
/// With a metric, only general points are kept.
PointSample sample_regular_points(const PlaneCurve& x, int count, Rng& rng,
                                  const MetricStructure* metric = nullptr);

/// x^t y^(pe) + z^(pe+t) over F_p.
PlaneCurve strange_family(std::uint64_t p, int e, int t);

/// All points of P^2(F_p), in a fixed order.
std::vector<Vec3> all_points(FieldSpec f);

/// Random invertible matrix whose last column is c.
Mat3 frame_with_center(const Vec3& c, Rng& rng);

/// Res_z of f(T x) and g(T x) as a binary form in (x, y); its roots are the
/// projections of V(f, g) from the third column c of T, provided f(c) != 0.
BinaryForm projected_resultant(const MultiPoly& f, const MultiPoly& g, const Mat3& t);

/// Random centers off the curve f.
std::vector<Vec3> projection_centers(const MultiPoly& f, int count, Rng& rng);

/// Number of distinct closure points of V(f, g) outside V(f, g, e_1, ..., e_k),
/// maximised over projection centers (each center can only undercount).
/// Throws Errc::degenerate if g vanishes on a component of f.
int count_intersections(const MultiPoly& f, const MultiPoly& g, std::span<const MultiPoly> exclusions, Rng& rng,
                        int centers);

/// Whether the homogeneous polynomials have a common projective zero; the
/// first one must be nonzero.
bool have_common_zero(std::span<const MultiPoly> polys, Rng& rng, int centers);

}  // namespace ng
