/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "normalgeom/eliminate.hpp"

namespace ng {

/// Lines normal to X at two distinct regular points, or normal to X and Y.
struct BottleneckReport {
  enum class Kind { single, pair };
  Kind kind = Kind::single;
  bool decided = true;  // false when elimination was skipped
  bool finite = true;
  std::vector<ProjectiveLine> lines;  // lines defined over the base field, verified
  std::optional<int> count_closure;
  std::vector<std::pair<ProjectivePoint, ProjectivePoint>> witness_pairs;
  std::optional<MultiPoly> component;  // positive-dimensional part, in u0, u1, u2
  int attempts = 0;
  std::vector<std::string> notes;
};

/// Feet a on the affine chart of h_inf, b = a + l v(a) on the other curve,
/// with parallel normal directions. Finiteness is read off iterated
/// resultants; finite systems of degree <= 3 are solved exactly. The line at
/// infinity is never reported.
BottleneckReport bottlenecks(const PlaneCurve& x, const PlaneCurve* y, const MetricStructure& m, Rng& rng,
                             const Deadline& deadline = {});

}  // namespace ng
