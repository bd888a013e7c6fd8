/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include "normalgeom/normalgeom.h"

namespace {

struct Options {
  std::uint64_t characteristic = 0;
  std::string metric_line = "z";
  std::string metric_q = "x^2+y^2";
  int samples = 20;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool force = false;
  double budget = 0;
  std::string fault;

  std::string curve;
  std::string second;
  std::string line;
  std::string other;
  std::uint64_t p = 3;
  int e = 1;
  int t = 2;
};

using ContextPtr = std::unique_ptr<ng_context, decltype(&ng_context_free)>;
using CurvePtr = std::unique_ptr<ng_curve, decltype(&ng_curve_free)>;

int fail(ng_status s, const ng_context* ctx) {
  std::cerr << "error: " << ng_last_error(ctx) << '\n';
  return s;
}

int emit(ng_status s, char*& out, const ng_context* ctx) {
  if (out) {
    std::cout << out;
    ng_string_free(out);
  }
  if (s != NG_OK && s != NG_ERR_VERIFY) return fail(s, ctx);
  return s;
}

ng_status configure(ng_context* ctx, const Options& o) {
  ng_status s = NG_OK;
  if ((s = ng_context_set_char(ctx, o.characteristic)) != NG_OK) return s;
  if ((s = ng_context_set_metric(ctx, o.metric_line.c_str(), o.metric_q.c_str())) != NG_OK) return s;
  if ((s = ng_context_set_samples(ctx, o.samples)) != NG_OK) return s;
  if ((s = ng_context_set_seed(ctx, o.seed)) != NG_OK) return s;
  if ((s = ng_context_set_budget(ctx, o.budget)) != NG_OK) return s;
  if ((s = ng_context_set_force_implicitize(ctx, o.force ? 1 : 0)) != NG_OK) return s;
  if ((s = ng_context_set_format(ctx, o.format.c_str())) != NG_OK) return s;
  return ng_context_set_fault(ctx, o.fault.empty() ? nullptr : o.fault.c_str());
}

CurvePtr parse(ng_context* ctx, const std::string& text, ng_status& s) {
  ng_curve* c = nullptr;
  s = ng_curve_parse(ctx, text.c_str(), &c);
  return CurvePtr(c, ng_curve_free);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Normal lines, separable degrees and bottlenecks of plane curves"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--char", o.characteristic, "Characteristic: 0 for Q or an odd prime")->capture_default_str();
  app.add_option("--metric-line", o.metric_line, "Line at infinity as a linear form")->capture_default_str();
  app.add_option("--metric-q", o.metric_q, "Quadratic form defining orthogonality")->capture_default_str();
  app.add_option("--samples", o.samples, "Sample count")->capture_default_str()->check(CLI::Range(1, 1000000));
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--force-implicitize", o.force, "Allow implicitization beyond the default degree bounds");
  app.add_option("--budget", o.budget, "Time limit in seconds for elimination steps (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--inject-fault", o.fault, "")->group("")->check(CLI::IsMember({"broken-perp"}));

  auto* analyze = app.add_subcommand("analyze", "Degree, class, normal class, separable degree, normal curve, bottlenecks");
  analyze->add_option("curve", o.curve, "Homogeneous polynomial in x, y, z")->required();
  auto* dual = app.add_subcommand("dual-curve", "Implicit equation of the dual curve");
  dual->add_option("curve", o.curve)->required();
  auto* normal = app.add_subcommand("normal-curve", "Implicit equation of the curve of normal lines");
  normal->add_option("curve", o.curve)->required();
  auto* fiber = app.add_subcommand("fiber", "Points whose normal line is the given line");
  fiber->add_option("curve", o.curve)->required();
  fiber->add_option("--line", o.line, "Line coefficients a,b,c")->required();
  auto* bottleneck = app.add_subcommand("bottlenecks", "Bottleneck lines of a curve or a pair of curves");
  bottleneck->add_option("curve", o.curve)->required();
  bottleneck->add_option("--other", o.other, "Second curve");
  auto* compare = app.add_subcommand("compare", "Whether two curves have the same curve of normal lines");
  compare->add_option("first", o.curve)->required();
  compare->add_option("second", o.second)->required();
  auto* family = app.add_subcommand("family", "Analyze x^t y^(pe) + z^(pe+t) over F_p");
  family->add_option("--p", o.p, "Prime")->capture_default_str();
  family->add_option("--e", o.e, "Exponent e >= 1")->capture_default_str();
  family->add_option("--t", o.t, "Exponent t >= 1")->capture_default_str();
  auto* samples = app.add_subcommand("samples", "CSV of sampled points with tangent and normal lines");
  samples->add_option("curve", o.curve)->required();
  auto* verify = app.add_subcommand("verify", "Run the verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return NG_ERR_USAGE;
  }

  ng_context* raw = nullptr;
  if (ng_context_create(&raw) != NG_OK) return NG_ERR_HYPOTHESIS;
  ContextPtr ctx(raw, ng_context_free);
  if (ng_status s = configure(ctx.get(), o); s != NG_OK) return fail(s, ctx.get());

  char* out = nullptr;
  ng_status s = NG_OK;
  // out is read only after the call that fills it
  auto finish = [&](ng_status r) { return emit(r, out, ctx.get()); };
  if (*verify) return finish(ng_verify(ctx.get(), &out));
  if (*family) {
    ng_curve* c = nullptr;
    if ((s = ng_curve_family(ctx.get(), o.p, o.e, o.t, &c)) != NG_OK) return fail(s, ctx.get());
    CurvePtr curve(c, ng_curve_free);
    return finish(ng_analyze(ctx.get(), curve.get(), &out));
  }

  CurvePtr curve = parse(ctx.get(), o.curve, s);
  if (s != NG_OK) return fail(s, ctx.get());
  if (*analyze) return finish(ng_analyze(ctx.get(), curve.get(), &out));
  if (*dual) return finish(ng_dual_curve(ctx.get(), curve.get(), &out));
  if (*normal) return finish(ng_normal_curve(ctx.get(), curve.get(), &out));
  if (*fiber) return finish(ng_fiber(ctx.get(), curve.get(), o.line.c_str(), &out));
  if (*samples) return finish(ng_samples_csv(ctx.get(), curve.get(), &out));
  if (*bottleneck) {
    CurvePtr other(nullptr, ng_curve_free);
    if (!o.other.empty()) {
      other = parse(ctx.get(), o.other, s);
      if (s != NG_OK) return fail(s, ctx.get());
    }
    return finish(ng_bottlenecks(ctx.get(), curve.get(), other.get(), &out));
  }
  if (*compare) {
    CurvePtr second = parse(ctx.get(), o.second, s);
    if (s != NG_OK) return fail(s, ctx.get());
    return finish(ng_compare(ctx.get(), curve.get(), second.get(), &out));
  }
  return NG_ERR_USAGE;
}
