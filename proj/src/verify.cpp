/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <algorithm>
#include <chrono>

#include "normalgeom/analysis.hpp"
#include "normalgeom/properties.hpp"

namespace ng::app {

namespace {

const FieldSpec kQ = FieldSpec::rationals();

MultiPoly dual_variable(FieldSpec f, std::size_t i) { return MultiPoly::variable(f, dual_vars(), i); }

bool same_lines(std::vector<ProjectiveLine> got, std::vector<ProjectiveLine> want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    if (std::find(got.begin(), got.end(), w) == got.end()) return false;
  }
  return true;
}

ProjectivePoint point(FieldSpec f, long a, long b, long c) { return ProjectivePoint(make_vec3(f, a, b, c)); }
ProjectiveLine line(FieldSpec f, long a, long b, long c) { return ProjectiveLine(make_vec3(f, a, b, c)); }

bool strange_family_basic(const RunConfig& cfg, json& d) {
  Rng rng = stream(cfg, 101);
  const PlaneCurve x = strange_family(3, 1, 2);
  const FieldSpec f = x.field();
  const MetricStructure m = MetricStructure::euclidean(f);
  const auto o = strange_point(x);
  d["strange_point"] = o ? point_json(*o) : json(nullptr);
  const DualCurveResult nc = normal_curve(x, m, rng);
  d["normal_curve"] = nc.poly.to_string();
  const SeparableDegree s = separable_degree(x, m, rng);
  d["fiber_e"] = s.fiber_e;
  const int mu = multiplicity_at(x, point(f, 1, 0, 0));
  d["multiplicity_at_100"] = mu;
  d["degree"] = x.degree();
  return o && *o == point(f, 0, 1, 0) && nc.poly.canonical() == dual_variable(f, 0) && s.fiber_e == 2 && mu == 3 &&
         s.fiber_e == x.degree() - mu;
}

bool strange_family_tangent(const RunConfig& cfg, json& d) {
  Rng rng = stream(cfg, 102);
  const PlaneCurve x = strange_family(5, 1, 3);
  const MetricStructure m = MetricStructure::euclidean(x.field());
  const SeparableDegree s = separable_degree(x, m, rng);
  const SeparableDegree t = tangent_separable_degree(x, rng);
  d["degree"] = x.degree();
  d["fiber_e"] = s.fiber_e;
  d["tangent_fiber"] = t.fiber_e;
  return x.degree() == 8 && s.fiber_e == 3 && t.fiber_e == 1;
}

bool ellipse(const RunConfig& cfg, json& d) {
  Rng rng = stream(cfg, 103);
  const PlaneCurve x = PlaneCurve::parse("x^2+2*y^2-z^2", kQ);
  const MetricStructure m = MetricStructure::euclidean(kQ);
  const CountResult cls = curve_class(x, rng), ncls = normal_class_count(x, m, rng);
  const DualCurveResult nc = normal_curve(x, m, rng);
  const SeparableDegree s = separable_degree(x, m, rng);
  const BottleneckReport b = bottlenecks(x, nullptr, m, rng);
  d["class"] = cls.value;
  d["normal_class"] = ncls.value;
  d["normal_curve_degree"] = nc.degree;
  d["fiber_e"] = s.fiber_e;
  d["bottlenecks_finite"] = b.decided && b.finite;
  d["bottleneck_count"] = b.count_closure ? json(*b.count_closure) : json(nullptr);
  json lines = json::array();
  for (const auto& l : b.lines) lines.push_back(line_json(l));
  d["bottleneck_lines"] = lines;
  return cls.value == 2 && ncls.value == 4 && ncls.value == x.degree() + cls.value && nc.degree == 4 &&
         s.fiber_e == 1 && b.decided && b.finite && b.count_closure == 2 &&
         same_lines(b.lines, {line(kQ, 1, 0, 0), line(kQ, 0, 1, 0)});
}

bool circle(const RunConfig& cfg, json& d) {
  Rng rng = stream(cfg, 104);
  const PlaneCurve x = PlaneCurve::parse("x^2+y^2-z^2", kQ);
  const MetricStructure m = MetricStructure::euclidean(kQ);
  const bool circular = is_circular(x, m);
  const SeparableDegree s = separable_degree(x, m, rng);
  const BottleneckReport b = bottlenecks(x, nullptr, m, rng);
  const DualCurveResult nc = normal_curve(x, m, rng);
  d["circular"] = circular;
  d["fiber_e"] = s.fiber_e;
  d["bottlenecks_positive_dimensional"] = b.decided && !b.finite;
  d["normal_curve"] = nc.poly.to_string();
  d["annotation"] = nc.annotation;
  return circular && s.fiber_e == 2 && b.decided && !b.finite && nc.poly.canonical() == dual_variable(kQ, 2);
}

bool fermat_cubic(const RunConfig& cfg, json& d) {
  Rng rng = stream(cfg, 105);
  const PlaneCurve x = PlaneCurve::parse("x^3+y^3+z^3", kQ);
  const MetricStructure m = MetricStructure::euclidean(kQ);
  const CountResult cls = curve_class(x, rng), ncls = normal_class_count(x, m, rng);
  const DualCurveResult nc = normal_curve(x, m, rng);
  const SeparableDegree s = separable_degree(x, m, rng, 7, cls.value, nc.degree);
  d["class"] = cls.value;
  d["normal_class"] = ncls.value;
  d["fiber_e"] = s.fiber_e;
  json primes = json::array();
  bool primes_ok = s.primes.size() >= 3;
  for (auto p : s.primes) {
    primes.push_back(std::to_string(p));
    primes_ok = primes_ok && p > 3 && p < 10000;
  }
  d["primes"] = primes;
  d["per_prime"] = s.per_prime;
  d["normal_curve_degree"] = nc.degree;
  d["ratio"] = s.ratio_deg ? json(s.ratio_deg->get_str()) : json(nullptr);
  return cls.value == 6 && ncls.value == 9 && primes_ok && s.fiber_e == 1 && nc.degree == 9 && s.ratio_deg &&
         *s.ratio_deg == 1;
}

bool fermat_quartic(const RunConfig& cfg, json& d) {
  Rng rng = stream(cfg, 106);
  const PlaneCurve x = PlaneCurve::parse("x^4+y^4-z^4", kQ);
  const MetricStructure m = MetricStructure::euclidean(kQ);
  const CountResult cls = curve_class(x, rng), ncls = normal_class_count(x, m, rng);
  d["class"] = cls.value;
  d["normal_class"] = ncls.value;
  bool counting_only = false;
  try {
    normal_curve(x, m, rng);
  } catch (const Error& e) {
    counting_only = e.code() == Errc::budget;
  }
  d["counting_only"] = counting_only;
  bool meets = true;
  json checked = json::array();
  for (int k = 0; k < 3; ++k) {
    const std::uint64_t p = random_prime(rng, 1000, 10000);
    const FieldSpec fp = FieldSpec::prime(p);
    const PlaneCurve xp = x.reduce_mod(fp);
    const auto lines = sample_normal_lines(xp, m.reduce_mod(fp), 7, rng);
    int distinct_ok = 0;
    for (const auto& [pt, l] : lines) {
      const auto b = l.basis();
      const BinaryForm r = to_binary_form(restrict_to_line(xp.equation(), b[0], b[1]), 0, 1, xp.degree());
      if (!r.is_zero() && distinct_root_count(r) == xp.degree()) ++distinct_ok;
    }
    meets = meets && !lines.empty() && distinct_ok == static_cast<int>(lines.size());
    checked.push_back(json{{"prime", std::to_string(p)}, {"lines", lines.size()}, {"meeting_in_d_points", distinct_ok}});
  }
  d["normal_lines"] = checked;
  return cls.value == 12 && ncls.value == 16 && counting_only && meets;
}

bool pathology(const RunConfig& cfg, json& d) {
  Rng rng = stream(cfg, 107);
  const PlaneCurve x = strange_family(3, 1, 2), y = strange_family(3, 1, 4);
  const FieldSpec f = x.field();
  const MetricStructure m = MetricStructure::euclidean(f);
  const DualCurveResult hx = normal_curve(x, m, rng), hy = normal_curve(y, m, rng);
  const EqualityEvidence ev = normal_curves_equal(x, y, m, rng, cfg.samples, &hx, &hy);
  const bool distinct = !(x.equation().canonical() == y.equation().canonical());
  const BottleneckReport b = bottlenecks(x, &y, m, rng);
  d["normal_curves_equal"] = ev.equal;
  d["exact"] = ev.exact;
  d["curves_distinct"] = distinct;
  d["bottlenecks_finite"] = b.finite;
  d["component"] = b.component ? json(b.component->to_string()) : json(nullptr);
  return ev.equal && distinct && b.decided && !b.finite && b.component &&
         b.component->canonical() == dual_variable(f, 0);
}

bool distinct_ellipses(const RunConfig& cfg, json& d) {
  Rng rng = stream(cfg, 108);
  const PlaneCurve x = PlaneCurve::parse("x^2+2*y^2-z^2", kQ), y = PlaneCurve::parse("x^2+3*y^2-z^2", kQ);
  const MetricStructure m = MetricStructure::euclidean(kQ);
  const EqualityEvidence ev = normal_curves_equal(x, y, m, rng, cfg.samples);
  d["normal_curves_equal"] = ev.equal;
  d["witness_line"] = ev.witness ? line_json(*ev.witness) : json(nullptr);
  d["witness_side"] = ev.witness_side;
  d["witness_field"] = ev.prime ? FieldSpec::prime(ev.prime).name() : std::string("Q");
  return !ev.equal && ev.witness.has_value();
}

bool properties(const RunConfig& cfg, json& d) {
  Rng rng = stream(cfg, 109);
  constexpr int kCases = 1000;
  const std::vector<PropertyOutcome> outcomes = {
      check_field_axioms(rng, kCases),           check_euler_identity(rng, kCases),
      check_resultants(rng, kCases),             check_perp(rng, kCases, cfg.broken_perp),
      check_incidence(rng, kCases),              check_isometry_equivariance(rng, kCases),
  };
  bool ok = true;
  json list = json::array();
  for (const auto& o : outcomes) {
    json j{{"name", o.name}, {"cases", o.cases}, {"failures", o.failures}};
    if (o.failures) j["first_failure"] = o.first_failure;
    list.push_back(j);
    ok = ok && o.passed() && o.cases >= kCases;
  }
  d["suites"] = list;
  return ok;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"AC1", "strange family (3,1,2): strange point, normal curve, separable degree, multiplicity", 1.0,
       strange_family_basic},
      {"AC2", "strange family (5,1,3): normal and tangent separable degrees", 2.0, strange_family_tangent},
      {"AC3", "ellipse: class, normal class, normal curve degree, birationality, bottleneck lines", 5.0, ellipse},
      {"AC4", "circle: circular, antipodal fibers, positive-dimensional bottlenecks, normal curve", 5.0, circle},
      {"AC5", "Fermat cubic: class, normal class, fiber over primes, normal curve degree", 30.0, fermat_cubic},
      {"AC6", "Fermat quartic: class and normal class by counting, normal lines meet in d points", 60.0,
       fermat_quartic},
      {"AC7", "strange pair: equal normal curves, distinct curves, non-finite bottlenecks", 2.0, pathology},
      {"AC8", "distinct ellipses: unequal normal curves with a witness line", 5.0, distinct_ellipses},
      {"AC9", "property suites", 60.0, properties},
  };
  return list;
}

CriterionResult run_criterion(const Criterion& c, const RunConfig& cfg) {
  CriterionResult r{c.id, c.title, false, 0, c.limit_seconds, json::object()};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.pass = c.check(cfg, r.details);
  } catch (const std::exception& e) {
    r.details["error"] = error_json(e);
    r.pass = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

json criterion_json(const CriterionResult& r) {
  return json{{"id", r.id},
              {"title", r.title},
              {"pass", r.pass},
              {"limit_seconds", r.limit_seconds},
              {"details", r.details},
              {"timing", {{"seconds", r.seconds}, {"within_limit", r.seconds < r.limit_seconds}}}};
}

}  // namespace

json run_verify(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  json r;
  r["schema"] = 1;
  r["command"] = "verify";
  r["seed"] = std::to_string(cfg.seed);
  json list = json::array();
  bool all = true;
  std::vector<CriterionResult> first;
  for (const auto& c : criteria()) {
    first.push_back(run_criterion(c, cfg));
    list.push_back(criterion_json(first.back()));
    all = all && first.back().pass;
  }
  // determinism: the exact criteria again with the same seed
  const auto t1 = std::chrono::steady_clock::now();
  bool same = true;
  for (std::size_t i = 0; i + 1 < criteria().size(); ++i) {
    const CriterionResult again = run_criterion(criteria()[i], cfg);
    same = same && again.pass == first[i].pass && again.details.dump() == first[i].details.dump();
  }
  const double repeat = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  list.push_back(json{{"id", "AC10"},
                      {"title", "determinism: repeated runs with one seed agree exactly"},
                      {"pass", same},
                      {"limit_seconds", nullptr},
                      {"details", {{"repeated", criteria().size() - 1}}},
                      {"timing", {{"seconds", repeat}}}});
  all = all && same;
  r["criteria"] = list;
  r["all_pass"] = all;
  r["timing"] = json{{"total", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  return r;
}

bool verify_passed(const json& report) { return report.value("all_pass", false); }

}  // namespace ng::app
