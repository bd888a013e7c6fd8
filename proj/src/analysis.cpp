/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "normalgeom/analysis.hpp"

#include <chrono>
#include <sstream>

namespace ng::app {

namespace {

using Clock = std::chrono::steady_clock;

enum Tag : std::uint64_t {
  kClass = 1,
  kNormalClass,
  kSeparable,
  kNormalCurve,
  kDualCurve,
  kBottlenecks,
  kCompare,
  kSamples,
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
void section(json& out, json& timing, const std::string& key, F&& fn) {
  const auto t0 = Clock::now();
  try {
    out[key] = fn();
  } catch (const std::exception& e) {
    out[key] = json{{"error", error_json(e)}};
  }
  timing[key] = seconds_since(t0);
}

json header(const std::string& command, FieldSpec f, const RunConfig& cfg) {
  json r;
  r["schema"] = 1;
  r["command"] = command;
  r["field"] = f.name();
  r["seed"] = std::to_string(cfg.seed);
  return r;
}

json metric_json(const MetricStructure& m) {
  return json{{"line", line_json(m.h_inf())}, {"q", m.q_form().to_string()}};
}

json count_json(const CountResult& c) {
  json j{{"value", c.value}, {"stable", c.stable}, {"samples", c.samples}};
  if (!c.annotation.empty()) j["annotation"] = c.annotation;
  return j;
}

json dual_json(const DualCurveResult& d) {
  json j{{"equation", d.poly.to_string()}, {"degree", d.degree}};
  if (!d.annotation.empty()) j["annotation"] = d.annotation;
  json stripped = json::array();
  for (const auto& [factor, power] : d.stripped_factors) stripped.push_back({{"factor", factor.to_string()}, {"power", power}});
  j["stripped_factors"] = stripped;
  const auto& v = d.validation;
  json val{{"samples_checked", v.samples_checked}, {"samples_vanish", v.samples_vanish}};
  if (v.sample_prime) val["sample_prime"] = std::to_string(v.sample_prime);
  if (v.expected_degree) val["expected_degree"] = *v.expected_degree;
  if (v.degree_consistent) val["degree_consistent"] = *v.degree_consistent;
  if (v.resultant_divisible) {
    val["resultant_divisible"] = *v.resultant_divisible;
    val["resultant_multiplicity"] = v.resultant_multiplicity;
  }
  if (!v.notes.empty()) val["notes"] = v.notes;
  j["validation"] = val;
  return j;
}

json separable_json(const SeparableDegree& s) {
  json j{{"fiber_e", s.fiber_e}};
  j["ratio_deg"] = s.ratio_deg ? json(s.ratio_deg->get_str()) : json(nullptr);
  json primes = json::array();
  for (auto p : s.primes) primes.push_back(std::to_string(p));
  j["primes"] = primes;
  j["per_prime"] = s.per_prime;
  j["samples"] = s.samples;
  j["distinct_lines"] = s.distinct_lines;
  j["stable"] = s.stable;
  return j;
}

json bottleneck_json(const BottleneckReport& b) {
  json j{{"kind", b.kind == BottleneckReport::Kind::single ? "single" : "pair"},
         {"decided", b.decided},
         {"finite", b.finite}};
  j["count_closure"] = b.count_closure ? json(*b.count_closure) : json(nullptr);
  json lines = json::array();
  for (const auto& l : b.lines) lines.push_back(line_json(l));
  j["lines"] = lines;
  json pairs = json::array();
  for (const auto& [a, c] : b.witness_pairs) pairs.push_back(json::array({point_json(a), point_json(c)}));
  j["witness_pairs"] = pairs;
  j["component"] = b.component ? json(b.component->to_string()) : json(nullptr);
  j["attempts"] = b.attempts;
  j["notes"] = b.notes;
  return j;
}

json fiber_json(const FiberReport& f) {
  return json{{"line", line_json(f.line)},
              {"total_closure_points", f.total_closure_points},
              {"regular_points", f.regular_points}};
}

ImplicitOptions implicit_options(const RunConfig& cfg) {
  ImplicitOptions opt;
  opt.force = cfg.force_implicitize;
  opt.samples = cfg.samples;
  opt.deadline = Deadline::after(cfg.budget);
  return opt;
}

PlaneCurve read_curve(const std::string& text, const RunConfig& cfg) {
  return PlaneCurve::parse(text, config_field(cfg));
}

}  // namespace

FieldSpec config_field(const RunConfig& cfg) {
  if (cfg.samples < 1) throw Error(Errc::invalid_argument, "sample count must be at least 1");
  return FieldSpec::from_characteristic(cfg.characteristic);
}

MetricStructure config_metric(const RunConfig& cfg, FieldSpec f) {
  const MultiPoly l = parse_poly(cfg.metric_line, primal_vars(), f);
  if (l.is_zero() || l.total_degree() != 1 || !l.is_homogeneous())
    throw Error(Errc::invalid_argument, "metric line must be a nonzero linear form: " + cfg.metric_line);
  Vec3 h = make_vec3(f, 0, 0, 0);
  for (std::size_t i = 0; i < 3; ++i) h[i] = l.coefficient(monomial_of(i, 1));
  const MultiPoly q = parse_poly(cfg.metric_q, primal_vars(), f);
  if (q.is_zero() || q.total_degree() != 2 || !q.is_homogeneous())
    throw Error(Errc::invalid_argument, "metric form must be a quadratic form: " + cfg.metric_q);
  MetricStructure m(ProjectiveLine(h), q);
  return cfg.broken_perp ? m.with_broken_perp() : m;
}

Rng stream(const RunConfig& cfg, std::uint64_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(tag), 0x6e67u};
  return Rng(seq);
}

ProjectiveLine parse_line(const std::string& text, FieldSpec f) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw Error(Errc::parse, "line must be given as a,b,c: " + text);
  Vec3 c = make_vec3(f, 0, 0, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    const MultiPoly v = parse_poly(parts[i], primal_vars(), f);
    if (!v.is_zero() && !v.is_constant()) throw Error(Errc::parse, "line coefficient is not a number: " + parts[i]);
    c[i] = v.is_zero() ? Scalar::zero(f) : v.coefficient(0);
  }
  if (is_zero_vec(c)) throw Error(Errc::invalid_argument, "line coefficients are all zero");
  return ProjectiveLine(c);
}

json point_json(const ProjectivePoint& p) {
  json j = json::array();
  const ProjectivePoint n = p.normalized();
  for (const auto& c : n.coords()) j.push_back(c.to_string());
  return j;
}

json line_json(const ProjectiveLine& l) {
  json j = json::array();
  const ProjectiveLine n = l.normalized();
  for (const auto& c : n.coeffs()) j.push_back(c.to_string());
  return j;
}

json error_json(const std::exception& e) {
  if (const auto* ng_error = dynamic_cast<const Error*>(&e)) {
    return json{{"code", errc_name(ng_error->code())}, {"message", e.what()}};
  }
  return json{{"code", "internal"}, {"message", e.what()}};
}

json run_analyze(const std::string& curve, const RunConfig& cfg) { return run_analyze(read_curve(curve, cfg), cfg); }

json run_analyze(const PlaneCurve& x, const RunConfig& cfg) {
  const FieldSpec f = x.field();
  const MetricStructure m = config_metric(cfg, f);
  check_metric_compatible(x, m);
  json r = header("analyze", f, cfg);
  r["curve"] = x.to_string();
  r["degree"] = x.degree();
  r["metric"] = metric_json(m);
  r["hypotheses"] = json{{"char_ok", x.hypotheses_ok()}};
  json timing = json::object();

  section(r, timing, "smooth", [&] { return json(is_smooth(x)); });
  section(r, timing, "circular", [&] { return json(is_circular(x, m)); });
  section(r, timing, "strange_point", [&] {
    const auto o = strange_point(x);
    return o ? point_json(*o) : json(nullptr);
  });

  std::optional<int> cls, ncls, fiber, ndeg;
  section(r, timing, "class", [&] {
    Rng rng = stream(cfg, kClass);
    const CountResult c = curve_class(x, rng);
    cls = c.value;
    return count_json(c);
  });
  section(r, timing, "normal_class", [&] {
    Rng rng = stream(cfg, kNormalClass);
    const CountResult c = normal_class_count(x, m, rng);
    ncls = c.value;
    return count_json(c);
  });
  section(r, timing, "separable_degree", [&] {
    Rng rng = stream(cfg, kSeparable);
    const SeparableDegree s = separable_degree(x, m, rng);
    fiber = s.fiber_e;
    return separable_json(s);
  });
  section(r, timing, "normal_curve", [&] {
    Rng rng = stream(cfg, kNormalCurve);
    ImplicitOptions opt = implicit_options(cfg);
    if (ncls && fiber && *fiber > 0 && *ncls % *fiber == 0) opt.expected_degree = *ncls / *fiber;
    const DualCurveResult d = normal_curve(x, m, rng, opt);
    ndeg = d.degree;
    return dual_json(d);
  });
  if (fiber && cls && ndeg && *ndeg > 0) {
    mpq_class ratio(x.degree() + *cls, *ndeg);
    ratio.canonicalize();
    r["separable_degree"]["ratio_deg"] = ratio.get_str();
  }
  section(r, timing, "bottlenecks", [&] {
    Rng rng = stream(cfg, kBottlenecks);
    return bottleneck_json(bottlenecks(x, nullptr, m, rng, Deadline::after(cfg.budget)));
  });
  r["timing"] = timing;
  return r;
}

json run_dual_curve(const std::string& curve, const RunConfig& cfg) {
  const PlaneCurve x = read_curve(curve, cfg);
  json r = header("dual-curve", x.field(), cfg);
  r["curve"] = x.to_string();
  const auto t0 = Clock::now();
  Rng rng = stream(cfg, kDualCurve);
  r["dual_curve"] = dual_json(dual_curve(x, rng, implicit_options(cfg)));
  r["timing"] = json{{"dual_curve", seconds_since(t0)}};
  return r;
}

json run_normal_curve(const std::string& curve, const RunConfig& cfg) {
  const PlaneCurve x = read_curve(curve, cfg);
  const MetricStructure m = config_metric(cfg, x.field());
  check_metric_compatible(x, m);
  json r = header("normal-curve", x.field(), cfg);
  r["curve"] = x.to_string();
  r["metric"] = metric_json(m);
  const auto t0 = Clock::now();
  Rng rng = stream(cfg, kNormalCurve);
  r["normal_curve"] = dual_json(normal_curve(x, m, rng, implicit_options(cfg)));
  r["timing"] = json{{"normal_curve", seconds_since(t0)}};
  return r;
}

json run_fiber(const std::string& curve, const std::string& line, const RunConfig& cfg) {
  const PlaneCurve x = read_curve(curve, cfg);
  const MetricStructure m = config_metric(cfg, x.field());
  check_metric_compatible(x, m);
  const ProjectiveLine l = parse_line(line, x.field());
  json r = header("fiber", x.field(), cfg);
  r["curve"] = x.to_string();
  r["metric"] = metric_json(m);
  r["fiber"] = fiber_json(eta_fiber_count(x, l, m));
  return r;
}

json run_bottlenecks(const std::string& curve, const std::optional<std::string>& other, const RunConfig& cfg) {
  const PlaneCurve x = read_curve(curve, cfg);
  const MetricStructure m = config_metric(cfg, x.field());
  check_metric_compatible(x, m);
  std::optional<PlaneCurve> y;
  if (other) {
    y.emplace(read_curve(*other, cfg));
    check_metric_compatible(*y, m);
  }
  json r = header("bottlenecks", x.field(), cfg);
  r["curve"] = x.to_string();
  if (y) r["other"] = y->to_string();
  r["metric"] = metric_json(m);
  const auto t0 = Clock::now();
  Rng rng = stream(cfg, kBottlenecks);
  r["bottlenecks"] = bottleneck_json(bottlenecks(x, y ? &*y : nullptr, m, rng, Deadline::after(cfg.budget)));
  r["timing"] = json{{"bottlenecks", seconds_since(t0)}};
  return r;
}

json run_compare(const std::string& first, const std::string& second, const RunConfig& cfg) {
  const PlaneCurve x = read_curve(first, cfg), y = read_curve(second, cfg);
  const MetricStructure m = config_metric(cfg, x.field());
  check_metric_compatible(x, m);
  check_metric_compatible(y, m);
  json r = header("compare", x.field(), cfg);
  r["first"] = x.to_string();
  r["second"] = y.to_string();
  r["metric"] = metric_json(m);
  json timing = json::object();

  std::optional<DualCurveResult> hx, hy;
  section(r, timing, "normal_curves", [&] {
    Rng rng = stream(cfg, kNormalCurve);
    json j;
    for (auto* slot : {&hx, &hy}) {
      const PlaneCurve& c = slot == &hx ? x : y;
      try {
        slot->emplace(normal_curve(c, m, rng, implicit_options(cfg)));
        j.push_back(dual_json(**slot));
      } catch (const Error& e) {
        j.push_back(json{{"error", error_json(e)}});
      }
    }
    return j;
  });

  const bool identical = x.equation().primitive() == y.equation().primitive();
  section(r, timing, "evidence", [&] {
    Rng rng = stream(cfg, kCompare);
    const EqualityEvidence ev = normal_curves_equal(x, y, m, rng, cfg.samples, hx ? &*hx : nullptr,
                                                    hy ? &*hy : nullptr);
    r["equal"] = ev.equal;
    r["curves_identical"] = identical;
    r["pathology"] = ev.equal && !identical;
    json j{{"exact", ev.exact}, {"samples_first", ev.samples_first}, {"samples_second", ev.samples_second}};
    if (ev.witness) {
      j["witness_line"] = line_json(*ev.witness);
      j["witness_side"] = ev.witness_side;
      j["witness_field"] = ev.prime ? FieldSpec::prime(ev.prime).name() : x.field().name();
    }
    if (ev.witness_point) j["witness_point"] = point_json(*ev.witness_point);
    return j;
  });
  section(r, timing, "bottlenecks", [&] {
    Rng rng = stream(cfg, kBottlenecks);
    return bottleneck_json(bottlenecks(x, &y, m, rng, Deadline::after(cfg.budget)));
  });
  r["timing"] = timing;
  return r;
}

json run_family(std::uint64_t p, int e, int t, const RunConfig& cfg) {
  RunConfig c = cfg;
  c.characteristic = p;
  const PlaneCurve x = strange_family(p, e, t);
  json r = run_analyze(x, c);
  r["command"] = "family";
  r["family"] = json{{"p", p}, {"e", e}, {"t", t}};
  return r;
}

std::string emit_samples(const std::string& curve, const RunConfig& cfg) {
  const PlaneCurve x = read_curve(curve, cfg);
  const FieldSpec f = x.field();
  if (f.is_prime() && f.characteristic() > 10000)
    throw Error(Errc::invalid_argument, "sample output needs Q or a prime field with p <= 10000");
  const MetricStructure m = config_metric(cfg, f);
  check_metric_compatible(x, m);
  Rng rng = stream(cfg, kSamples);
  const PointSample s = sample_regular_points(x, cfg.samples, rng, &m);
  if (s.points.empty()) throw Error(Errc::budget, "no general regular points found");
  std::ostringstream out;
  out << "px,py,pz,tx,ty,tz,nx,ny,nz,fiber\n";
  for (const auto& p : s.points) {
    const ProjectiveLine t = tangent_line(x, p).normalized();
    const ProjectiveLine n = normal_line(x, p, m).normalized();
    const auto pc = p.normalized().coords();
    out << pc[0].to_string() << ',' << pc[1].to_string() << ',' << pc[2].to_string() << ',';
    out << t[0].to_string() << ',' << t[1].to_string() << ',' << t[2].to_string() << ',';
    out << n[0].to_string() << ',' << n[1].to_string() << ',' << n[2].to_string() << ',';
    out << eta_fiber_count(x, n, m).regular_points << '\n';
  }
  return out.str();
}

json strip_timing(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() != "timing") out[it.key()] = strip_timing(it.value());
    }
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(strip_timing(v));
    return out;
  }
  return j;
}

namespace {

void flatten(const json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && v.is_primitive();
    if (flat) {
      out << path << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      out << "]\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

}  // namespace

std::string render(const json& j, const std::string& format) {
  if (format == "text") {
    std::ostringstream out;
    flatten(j, "", out);
    return out.str();
  }
  return j.dump(2) + "\n";
}

}  // namespace ng::app
