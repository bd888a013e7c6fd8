/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <utility>

#include "normalgeom/budget.hpp"
#include "normalgeom/curve.hpp"

namespace ng {

/// A randomized count repeated over several samples.
struct CountResult {
  int value = 0;
  bool stable = true;
  std::vector<int> samples;
  std::string annotation;  // empty, "strange", "non-reflexive", ...
};

/// o . grad F.
MultiPoly polar_curve(const PlaneCurve& x, const ProjectivePoint& o);
/// det[o; p; n(p)] = o . psi(p); its zeros on X are the feet of normals through o.
MultiPoly normal_polar(const PlaneCurve& x, const ProjectivePoint& o, const MetricStructure& m);

/// Class: tangent lines through a general point. For strange curves the
/// dual is a line and 1 is returned with annotation "strange".
CountResult curve_class(const PlaneCurve& x, Rng& rng, int trials = 5);
/// Regular points whose normal passes through a general point o.
CountResult normal_class_count(const PlaneCurve& x, const MetricStructure& m, Rng& rng, int trials = 5);

struct ImplicitValidation {
  int samples_checked = 0;
  bool samples_vanish = true;
  std::uint64_t sample_prime = 0;  // 0 if sampled over the curve's own field
  std::optional<int> expected_degree;
  std::optional<bool> degree_consistent;
  std::optional<bool> resultant_divisible;
  int resultant_multiplicity = 0;
  std::vector<std::string> notes;
};

struct DualCurveResult {
  MultiPoly poly;  // in u0, u1, u2
  int degree = 0;
  std::vector<std::pair<MultiPoly, int>> stripped_factors;
  ImplicitValidation validation;
  std::string annotation;
};

struct ImplicitOptions {
  int max_degree = 9;
  bool force = false;  // lift the degree cap to d^2 and allow d >= 4 over Q
  Deadline deadline;
  int samples = 20;
  std::optional<int> expected_degree;
};

/// Least-degree H with H(phi(p)) = 0 on X, found as the kernel of the map
/// H -> H(phi) mod F on forms of increasing degree.
MultiPoly implicit_image(const MultiPoly& f, const PolyVec& phi, int max_degree, const Deadline& deadline);

DualCurveResult dual_curve(const PlaneCurve& x, Rng& rng, const ImplicitOptions& opt = {});
DualCurveResult normal_curve(const PlaneCurve& x, const MetricStructure& m, Rng& rng, const ImplicitOptions& opt = {});

struct FiberReport {
  ProjectiveLine line;
  int total_closure_points = 0;
  int regular_points = 0;
  int samples_used = 1;
  bool stable = true;
};

/// Binary form on the basis of L vanishing at the q in X with n(q) on L.
BinaryForm normal_feet_form(const PlaneCurve& x, const ProjectiveLine& l, const MetricStructure& m);
/// Points q of L on X with n(q) on L, split by whether psi(q) vanishes.
FiberReport eta_fiber_count(const PlaneCurve& x, const ProjectiveLine& l, const MetricStructure& m);
/// Regular points of X whose tangent line is t.
int tangent_fiber_count(const PlaneCurve& x, const ProjectiveLine& t);

struct SeparableDegree {
  int fiber_e = 0;
  std::optional<mpq_class> ratio_deg;
  std::vector<std::uint64_t> primes;  // reduction primes used over Q
  std::vector<int> per_prime;
  int samples = 0;
  int distinct_lines = 0;
  bool stable = true;
};

/// Minimum fiber count over sampled general normal lines. Over Q the
/// count runs over several random primes which must agree. The ratio is
/// (d + class) / deg X^perp when both are supplied.
SeparableDegree separable_degree(const PlaneCurve& x, const MetricStructure& m, Rng& rng, int samples = 7,
                                 std::optional<int> class_value = std::nullopt,
                                 std::optional<int> normal_degree = std::nullopt);
/// Same for the tangent map.
SeparableDegree tangent_separable_degree(const PlaneCurve& x, Rng& rng, int samples = 7);

/// Normal lines at sampled general points (with replacement when the field
/// has few points).
std::vector<std::pair<ProjectivePoint, ProjectiveLine>> sample_normal_lines(const PlaneCurve& x,
                                                                            const MetricStructure& m, int count,
                                                                            Rng& rng);

/// A random prime in [lo, hi).
std::uint64_t random_prime(Rng& rng, std::uint64_t lo, std::uint64_t hi);

struct EqualityEvidence {
  bool equal = true;
  bool exact = false;  // decided by comparing implicit equations
  std::optional<ProjectiveLine> witness;
  std::optional<ProjectivePoint> witness_point;
  std::string witness_side;  // "first" or "second": whose normal line failed
  std::uint64_t prime = 0;   // field of the witness, 0 for Q
  int samples_first = 0;
  int samples_second = 0;
};

EqualityEvidence normal_curves_equal(const PlaneCurve& x, const PlaneCurve& y, const MetricStructure& m, Rng& rng,
                                     int samples = 20, const DualCurveResult* hx = nullptr,
                                     const DualCurveResult* hy = nullptr);

}  // namespace ng
