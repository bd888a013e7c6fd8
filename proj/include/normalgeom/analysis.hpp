/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "normalgeom/bottleneck.hpp"

namespace ng::app {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::uint64_t characteristic = 0;
  std::string metric_line = "z";
  std::string metric_q = "x^2+y^2";
  int samples = 20;
  std::uint64_t seed = 0;
  bool force_implicitize = false;
  double budget = 0;  // seconds, 0 for none
  bool broken_perp = false;
};

/// Throws Errc::invalid_argument on a bad characteristic or sample count.
FieldSpec config_field(const RunConfig& cfg);
/// The metric line is a linear form, e.g. "z" or "x+2*z".
MetricStructure config_metric(const RunConfig& cfg, FieldSpec f);
/// Independent random stream per sub-analysis.
Rng stream(const RunConfig& cfg, std::uint64_t tag);

/// Parses "a,b,c" into a line of the primal plane.
ProjectiveLine parse_line(const std::string& text, FieldSpec f);

json point_json(const ProjectivePoint& p);
json line_json(const ProjectiveLine& l);
json error_json(const std::exception& e);

json run_analyze(const std::string& curve, const RunConfig& cfg);
json run_analyze(const PlaneCurve& x, const RunConfig& cfg);
json run_dual_curve(const std::string& curve, const RunConfig& cfg);
json run_normal_curve(const std::string& curve, const RunConfig& cfg);
json run_fiber(const std::string& curve, const std::string& line, const RunConfig& cfg);
json run_bottlenecks(const std::string& curve, const std::optional<std::string>& other, const RunConfig& cfg);
json run_compare(const std::string& first, const std::string& second, const RunConfig& cfg);
/// Analysis of x^t y^(pe) + z^(pe+t) over F_p.
json run_family(std::uint64_t p, int e, int t, const RunConfig& cfg);
/// CSV with header px,py,pz,tx,ty,tz,nx,ny,nz,fiber.
std::string emit_samples(const std::string& curve, const RunConfig& cfg);

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  json details;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<bool(const RunConfig&, json&)> check;
};

/// Criteria one through nine; determinism is checked by the caller.
const std::vector<Criterion>& criteria();
CriterionResult run_criterion(const Criterion& c, const RunConfig& cfg);

/// All criteria, with a determinism check that repeats the exact ones.
json run_verify(const RunConfig& cfg);
bool verify_passed(const json& report);

/// Copy without "timing" keys at any depth.
json strip_timing(const json& j);
/// "json" pretty-prints; "text" flattens to key: value lines.
std::string render(const json& j, const std::string& format);

}  // namespace ng::app
