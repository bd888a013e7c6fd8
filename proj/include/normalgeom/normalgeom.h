/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NORMALGEOM_H
#define NORMALGEOM_H

#include <stdint.h>

#if defined(_WIN32)
#  ifdef NG_BUILDING_LIBRARY
#    define NG_API __declspec(dllexport)
#  else
#    define NG_API __declspec(dllimport)
#  endif
#else
#  define NG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes for the command-line tool. */
typedef enum ng_status {
  NG_OK = 0,
  NG_ERR_USAGE = 1,      /* bad arguments or unparsable input */
  NG_ERR_HYPOTHESIS = 2, /* input rejected, or a computation could not complete */
  NG_ERR_VERIFY = 3      /* at least one verification criterion failed */
} ng_status;

typedef struct ng_context ng_context;
typedef struct ng_curve ng_curve;

NG_API const char* ng_version(void);
NG_API const char* ng_status_name(ng_status status);

/* Context: field, metric, sampling and output settings. Defaults are the
 * rationals, the line z = 0 with x^2 + y^2, 20 samples, seed 0, JSON output. */
NG_API ng_status ng_context_create(ng_context** out);
NG_API void ng_context_free(ng_context* ctx);
/* Message of the last failed call on this context, or "". */
NG_API const char* ng_last_error(const ng_context* ctx);

NG_API ng_status ng_context_set_char(ng_context* ctx, uint64_t characteristic);
NG_API ng_status ng_context_set_metric(ng_context* ctx, const char* line, const char* q);
NG_API ng_status ng_context_set_samples(ng_context* ctx, int samples);
NG_API ng_status ng_context_set_seed(ng_context* ctx, uint64_t seed);
/* Seconds; 0 removes the limit. */
NG_API ng_status ng_context_set_budget(ng_context* ctx, double seconds);
NG_API ng_status ng_context_set_force_implicitize(ng_context* ctx, int enabled);
/* "json" or "text". */
NG_API ng_status ng_context_set_format(ng_context* ctx, const char* format);
/* Test hook: "broken-perp", or NULL to clear. */
NG_API ng_status ng_context_set_fault(ng_context* ctx, const char* fault);

/* Curves are parsed over the context's current field. */
NG_API ng_status ng_curve_parse(ng_context* ctx, const char* text, ng_curve** out);
/* x^t y^(pe) + z^(pe+t) over F_p. */
NG_API ng_status ng_curve_family(ng_context* ctx, uint64_t p, int e, int t, ng_curve** out);
NG_API void ng_curve_free(ng_curve* curve);
NG_API int ng_curve_degree(const ng_curve* curve);
/* Canonical equation; owned by the handle. */
NG_API const char* ng_curve_equation(const ng_curve* curve);

/* Reports are newly allocated strings released with ng_string_free. On
 * failure *out is NULL, except for ng_verify, which always returns a report. */
NG_API ng_status ng_analyze(ng_context* ctx, const ng_curve* curve, char** out);
NG_API ng_status ng_dual_curve(ng_context* ctx, const ng_curve* curve, char** out);
NG_API ng_status ng_normal_curve(ng_context* ctx, const ng_curve* curve, char** out);
/* line is "a,b,c" for a*x + b*y + c*z = 0. */
NG_API ng_status ng_fiber(ng_context* ctx, const ng_curve* curve, const char* line, char** out);
/* other may be NULL for bottlenecks of a single curve. */
NG_API ng_status ng_bottlenecks(ng_context* ctx, const ng_curve* curve, const ng_curve* other, char** out);
NG_API ng_status ng_compare(ng_context* ctx, const ng_curve* first, const ng_curve* second, char** out);
NG_API ng_status ng_samples_csv(ng_context* ctx, const ng_curve* curve, char** out);
NG_API ng_status ng_verify(ng_context* ctx, char** out);
NG_API void ng_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* NORMALGEOM_H */
