/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "normalgeom/normalgeom.h"

#include <array>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>

#include "normalgeom/analysis.hpp"

struct ng_context {
  ng::app::RunConfig cfg;
  std::string format = "json";
  std::string last_error;
};

struct ng_curve {
  std::string equation;
  std::uint64_t characteristic = 0;
  int degree = 0;
  std::optional<std::array<int, 2>> family;  // e, t
};

namespace {

ng_status status_of(const ng::Error& e) {
  switch (e.code()) {
    case ng::Errc::parse:
    case ng::Errc::invalid_argument:
    case ng::Errc::field_mismatch:
      return NG_ERR_USAGE;
    default:
      return NG_ERR_HYPOTHESIS;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, mapping exceptions to a status and the context's error message.
template <class F>
ng_status guarded(ng_context* ctx, F&& fn) {
  if (!ctx) return NG_ERR_USAGE;
  try {
    ctx->last_error.clear();
    return fn();
  } catch (const ng::Error& e) {
    ctx->last_error = std::string(ng::errc_name(e.code())) + ": " + e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return NG_ERR_HYPOTHESIS;
  } catch (const std::exception& e) {
    ctx->last_error = std::string("internal: ") + e.what();
    return NG_ERR_HYPOTHESIS;
  }
}

ng_status usage(ng_context* ctx, const char* message) {
  ctx->last_error = message;
  return NG_ERR_USAGE;
}

ng::app::RunConfig config_for(const ng_context* ctx, const ng_curve* curve) {
  ng::app::RunConfig cfg = ctx->cfg;
  cfg.characteristic = curve->characteristic;
  return cfg;
}

ng_status emit(ng_context* ctx, const ng::app::json& report, char** out) {
  *out = copy_string(ng::app::render(report, ctx->format));
  return NG_OK;
}

}  // namespace

extern "C" {

const char* ng_version(void) { return "1.0.0"; }

const char* ng_status_name(ng_status status) {
  switch (status) {
    case NG_OK: return "ok";
    case NG_ERR_USAGE: return "usage";
    case NG_ERR_HYPOTHESIS: return "hypothesis";
    case NG_ERR_VERIFY: return "verify";
  }
  return "unknown";
}

ng_status ng_context_create(ng_context** out) {
  if (!out) return NG_ERR_USAGE;
  *out = new (std::nothrow) ng_context();
  return *out ? NG_OK : NG_ERR_HYPOTHESIS;
}

void ng_context_free(ng_context* ctx) { delete ctx; }

const char* ng_last_error(const ng_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

ng_status ng_context_set_char(ng_context* ctx, uint64_t characteristic) {
  return guarded(ctx, [&] {
    ng::FieldSpec::from_characteristic(characteristic);
    ctx->cfg.characteristic = characteristic;
    return NG_OK;
  });
}

ng_status ng_context_set_metric(ng_context* ctx, const char* line, const char* q) {
  return guarded(ctx, [&] {
    if (!line || !q) return usage(ctx, "metric line and form are required");
    ctx->cfg.metric_line = line;
    ctx->cfg.metric_q = q;
    return NG_OK;
  });
}

ng_status ng_context_set_samples(ng_context* ctx, int samples) {
  return guarded(ctx, [&] {
    if (samples < 1) return usage(ctx, "sample count must be at least 1");
    ctx->cfg.samples = samples;
    return NG_OK;
  });
}

ng_status ng_context_set_seed(ng_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] {
    ctx->cfg.seed = seed;
    return NG_OK;
  });
}

ng_status ng_context_set_budget(ng_context* ctx, double seconds) {
  return guarded(ctx, [&] {
    if (!(seconds >= 0)) return usage(ctx, "budget must be non-negative");
    ctx->cfg.budget = seconds;
    return NG_OK;
  });
}

ng_status ng_context_set_force_implicitize(ng_context* ctx, int enabled) {
  return guarded(ctx, [&] {
    ctx->cfg.force_implicitize = enabled != 0;
    return NG_OK;
  });
}

ng_status ng_context_set_format(ng_context* ctx, const char* format) {
  return guarded(ctx, [&] {
    if (!format || (std::strcmp(format, "json") != 0 && std::strcmp(format, "text") != 0))
      return usage(ctx, "format must be json or text");
    ctx->format = format;
    return NG_OK;
  });
}

ng_status ng_context_set_fault(ng_context* ctx, const char* fault) {
  return guarded(ctx, [&] {
    if (!fault) {
      ctx->cfg.broken_perp = false;
      return NG_OK;
    }
    if (std::strcmp(fault, "broken-perp") != 0) return usage(ctx, "unknown fault");
    ctx->cfg.broken_perp = true;
    return NG_OK;
  });
}

ng_status ng_curve_parse(ng_context* ctx, const char* text, ng_curve** out) {
  return guarded(ctx, [&] {
    if (!text || !out) return usage(ctx, "curve text and output handle are required");
    *out = nullptr;
    const ng::PlaneCurve x = ng::PlaneCurve::parse(text, ng::app::config_field(ctx->cfg));
    *out = new ng_curve{x.to_string(), ctx->cfg.characteristic, x.degree(), std::nullopt};
    return NG_OK;
  });
}

ng_status ng_curve_family(ng_context* ctx, uint64_t p, int e, int t, ng_curve** out) {
  return guarded(ctx, [&] {
    if (!out) return usage(ctx, "output handle is required");
    *out = nullptr;
    const ng::PlaneCurve x = ng::strange_family(p, e, t);
    *out = new ng_curve{x.to_string(), p, x.degree(), std::array<int, 2>{e, t}};
    return NG_OK;
  });
}

void ng_curve_free(ng_curve* curve) { delete curve; }

int ng_curve_degree(const ng_curve* curve) { return curve ? curve->degree : -1; }

const char* ng_curve_equation(const ng_curve* curve) { return curve ? curve->equation.c_str() : ""; }

ng_status ng_analyze(ng_context* ctx, const ng_curve* curve, char** out) {
  return guarded(ctx, [&] {
    if (!curve || !out) return usage(ctx, "curve and output are required");
    *out = nullptr;
    const auto cfg = config_for(ctx, curve);
    if (curve->family)
      return emit(ctx, ng::app::run_family(curve->characteristic, (*curve->family)[0], (*curve->family)[1], cfg), out);
    return emit(ctx, ng::app::run_analyze(curve->equation, cfg), out);
  });
}

ng_status ng_dual_curve(ng_context* ctx, const ng_curve* curve, char** out) {
  return guarded(ctx, [&] {
    if (!curve || !out) return usage(ctx, "curve and output are required");
    *out = nullptr;
    return emit(ctx, ng::app::run_dual_curve(curve->equation, config_for(ctx, curve)), out);
  });
}

ng_status ng_normal_curve(ng_context* ctx, const ng_curve* curve, char** out) {
  return guarded(ctx, [&] {
    if (!curve || !out) return usage(ctx, "curve and output are required");
    *out = nullptr;
    return emit(ctx, ng::app::run_normal_curve(curve->equation, config_for(ctx, curve)), out);
  });
}

ng_status ng_fiber(ng_context* ctx, const ng_curve* curve, const char* line, char** out) {
  return guarded(ctx, [&] {
    if (!curve || !line || !out) return usage(ctx, "curve, line and output are required");
    *out = nullptr;
    return emit(ctx, ng::app::run_fiber(curve->equation, line, config_for(ctx, curve)), out);
  });
}

ng_status ng_bottlenecks(ng_context* ctx, const ng_curve* curve, const ng_curve* other, char** out) {
  return guarded(ctx, [&] {
    if (!curve || !out) return usage(ctx, "curve and output are required");
    *out = nullptr;
    if (other && other->characteristic != curve->characteristic) return usage(ctx, "curves over different fields");
    std::optional<std::string> second;
    if (other) second = other->equation;
    return emit(ctx, ng::app::run_bottlenecks(curve->equation, second, config_for(ctx, curve)), out);
  });
}

ng_status ng_compare(ng_context* ctx, const ng_curve* first, const ng_curve* second, char** out) {
  return guarded(ctx, [&] {
    if (!first || !second || !out) return usage(ctx, "two curves and output are required");
    *out = nullptr;
    if (first->characteristic != second->characteristic) return usage(ctx, "curves over different fields");
    return emit(ctx, ng::app::run_compare(first->equation, second->equation, config_for(ctx, first)), out);
  });
}

ng_status ng_samples_csv(ng_context* ctx, const ng_curve* curve, char** out) {
  return guarded(ctx, [&] {
    if (!curve || !out) return usage(ctx, "curve and output are required");
    *out = nullptr;
    *out = copy_string(ng::app::emit_samples(curve->equation, config_for(ctx, curve)));
    return NG_OK;
  });
}

ng_status ng_verify(ng_context* ctx, char** out) {
  return guarded(ctx, [&] {
    if (!out) return usage(ctx, "output is required");
    *out = nullptr;
    const auto report = ng::app::run_verify(ctx->cfg);
    emit(ctx, report, out);
    return ng::app::verify_passed(report) ? NG_OK : NG_ERR_VERIFY;
  });
}

void ng_string_free(char* s) { std::free(s); }

}  // extern "C"
