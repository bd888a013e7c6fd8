/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>

#include "normalgeom/curve.hpp"

namespace ng {

/// Tally of a randomized property check.
struct PropertyOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return cases > 0 && failures == 0; }
  void record(bool ok, const std::string& what);
};

PropertyOutcome check_field_axioms(Rng& rng, int cases);
/// x F_x + y F_y + z F_z = d F on random forms.
PropertyOutcome check_euler_identity(Rng& rng, int cases);
/// Res(f g, h) = Res(f, h) Res(g, h), and Res(f, g) = 0 exactly when f and g
/// share a root (exhaustive over small monic pairs in F_5 and F_7).
PropertyOutcome check_resultants(Rng& rng, int cases);
/// perp(perp(a)) = a and B(a, perp a) = 0 on random metrics.
PropertyOutcome check_perp(Rng& rng, int cases, bool broken = false);
/// p lies on its tangent and normal lines.
PropertyOutcome check_incidence(Rng& rng, int cases);
/// normal_line(gX, gp) = g(normal_line(X, p)) for random isometries g.
PropertyOutcome check_isometry_equivariance(Rng& rng, int cases);

/// A random reduced curve of the given degree over f.
PlaneCurve random_curve(FieldSpec f, int degree, Rng& rng);
/// A random metric over f, nondegenerate on its line.
MetricStructure random_metric(FieldSpec f, Rng& rng);

}  // namespace ng
