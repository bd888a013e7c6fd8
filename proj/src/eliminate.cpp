/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "normalgeom/eliminate.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace ng {

namespace {

int centers_for(FieldSpec f) { return f.is_rational() ? 4 : 6; }

Vec3 random_point(FieldSpec f, Rng& rng) {
  for (;;) {
    Vec3 v{sample_integer(f, rng, 20), sample_integer(f, rng, 20), sample_integer(f, rng, 20)};
    if (!is_zero_vec(v)) return v;
  }
}

// o off the curve and, when a metric is given, off h_inf
ProjectivePoint random_center(const PlaneCurve& x, const MetricStructure* m, Rng& rng) {
  for (int tries = 0; tries < 10000; ++tries) {
    Vec3 o = random_point(x.field(), rng);
    if (x.value_at(o).is_zero()) continue;
    if (m && dot(m->h_inf().coeffs(), o).is_zero()) continue;
    return ProjectivePoint(o);
  }
  throw Error(Errc::budget, "no general point found in " + x.field().name());
}

CountResult majority(std::vector<int> values) {
  CountResult r;
  r.samples = values;
  std::map<int, int> tally;
  for (int v : values) ++tally[v];
  int best = -1, freq = 0;
  bool tie = false;
  for (const auto& [v, n] : tally) {
    if (n > freq) {
      best = v;
      freq = n;
      tie = false;
    } else if (n == freq) {
      tie = true;
    }
  }
  if (tie) {
    std::string all;
    for (int v : values) all += (all.empty() ? "" : ",") + std::to_string(v);
    throw Error(Errc::unstable, "sampled counts do not stabilize: " + all);
  }
  r.value = best;
  r.stable = tally.size() == 1;
  return r;
}

BinaryForm restrict_form(const MultiPoly& p, const Vec3& a, const Vec3& b, int degree) {
  if (p.is_zero()) return BinaryForm{UPoly(p.field()), degree};
  return to_binary_form(restrict_to_line(p, a, b), 0, 1, degree);
}

Vec3 eval_vec(const PolyVec& v, const Vec3& p) { return {v[0].evaluate(p), v[1].evaluate(p), v[2].evaluate(p)}; }

// move a polynomial in (s, u0, u1, u2) that does not involve s into (u0, u1, u2)
MultiPoly drop_first_var(const MultiPoly& p) {
  std::vector<MultiPoly::Term> out;
  for (const auto& t : p.terms()) {
    if (exponent_of(t.mono, 0) != 0) throw Error(Errc::internal, "eliminated variable still present");
    Monomial m = 0;
    for (std::size_t j = 0; j < 3; ++j) m += monomial_of(j, exponent_of(t.mono, j + 1));
    out.push_back({m, t.coeff});
  }
  return MultiPoly(p.field(), dual_vars(), std::move(out));
}

enum class Target { dual, normal };

// Independent route: restrict to a moving line u and eliminate the line
// parameter. The result is H^k times the chart factor u.(a x b) and the
// dual lines of exceptional points.
void resultant_cross_check(const PlaneCurve& x, const MetricStructure* m, Target target, Rng& rng,
                           DualCurveResult& r) {
  const FieldSpec f = x.field();
  const std::vector<std::string> v4{"s", "u0", "u1", "u2"};
  Vec3 a, b;
  do {
    a = random_point(f, rng);
    b = random_point(f, rng);
  } while (is_zero_vec(cross(a, b)));
  const MultiPoly s = MultiPoly::variable(f, v4, 0);
  PolyVec u{MultiPoly::variable(f, v4, 1), MultiPoly::variable(f, v4, 2), MultiPoly::variable(f, v4, 3)};
  auto ucross = [&](const Vec3& w) {
    return PolyVec{w[2] * u[1] - w[1] * u[2], w[0] * u[2] - w[2] * u[0], w[1] * u[0] - w[0] * u[1]};
  };
  const PolyVec ua = ucross(a), ub = ucross(b);
  std::vector<MultiPoly> point;
  for (std::size_t k = 0; k < 3; ++k) point.push_back(s * ua[k] + ub[k]);
  const MultiPoly big_a = x.equation().compose(point);
  MultiPoly big_b;
  if (target == Target::dual) {
    big_b = big_a.derivative(0);
  } else {
    const NormalMap nm = normal_map(x, *m);
    big_b = MultiPoly(f, v4);
    for (std::size_t k = 0; k < 3; ++k) big_b += u[k] * nm.n[k].compose(point);
  }
  if (big_b.is_zero() || big_b.degree_in(0) < 1) {
    r.validation.notes.push_back("resultant route degenerate on the chosen chart");
    return;
  }
  MultiPoly res = drop_first_var(resultant(big_a, big_b, 0));
  if (res.is_zero()) {
    r.validation.notes.push_back("resultant route vanishes identically");
    return;
  }
  const Vec3 w = cross(a, b);
  MultiPoly chart(f, dual_vars());
  for (std::size_t k = 0; k < 3; ++k) chart += MultiPoly::term(f, dual_vars(), w[k], monomial_of(k, 1));
  int chart_power = 0;
  MultiPoly q;
  while (try_divide(res, chart, q)) {
    res = q;
    ++chart_power;
  }
  int mult = 0;
  while (!r.poly.is_constant() && try_divide(res, r.poly, q)) {
    res = q;
    ++mult;
  }
  if (chart_power > 0) r.stripped_factors.emplace_back(chart.canonical(), chart_power);
  if (mult > 0) r.stripped_factors.emplace_back(r.poly, mult);
  r.validation.resultant_divisible = mult >= 1;
  r.validation.resultant_multiplicity = mult;
  if (!res.is_constant())
    r.validation.notes.push_back("resultant cofactor of degree " + std::to_string(res.total_degree()) + " left");
}

// Checks H(phi(p)) = 0 on sampled points, over the curve's field or a
// reduction of it.
void check_samples(const PlaneCurve& x, const MetricStructure* m, Target target, Rng& rng, int samples,
                   DualCurveResult& r) {
  auto run = [&](const PlaneCurve& c, const MetricStructure* mm, const MultiPoly& h) {
    const PolyVec phi = target == Target::dual ? c.gradient() : normal_map(c, *mm).psi;
    const auto pts = sample_regular_points(c, samples, rng, mm);
    for (const auto& p : pts.points) {
      const Vec3 v = eval_vec(phi, p.coords());
      if (is_zero_vec(v)) continue;
      ++r.validation.samples_checked;
      if (!h.evaluate(v).is_zero()) {
        r.validation.samples_vanish = false;
        throw Error(Errc::internal, "implicit equation " + r.poly.to_string() + " does not vanish at the image of " +
                                        p.to_string() + " over " + c.field().name());
      }
    }
  };
  if (x.field().is_prime()) {
    run(x, m, r.poly);
    return;
  }
  run(x, m, r.poly);  // rational points, if any
  for (int attempt = 0; attempt < 20; ++attempt) {
    const std::uint64_t p = random_prime(rng, 10007, 65521);
    const FieldSpec fp = FieldSpec::prime(p);
    try {
      const PlaneCurve xp = x.reduce_mod(fp);
      const MultiPoly hp = r.poly.reduce_mod(fp);
      if (hp.total_degree() != r.poly.total_degree()) continue;
      if (m) {
        const MetricStructure mp = m->reduce_mod(fp);
        check_metric_compatible(xp, mp);
        run(xp, &mp, hp);
      } else {
        run(xp, nullptr, hp);
      }
      r.validation.sample_prime = p;
      return;
    } catch (const Error& e) {
      if (e.code() == Errc::internal) throw;
    }
  }
  r.validation.notes.push_back("no usable reduction prime for sampling");
}

int degree_cap(const PlaneCurve& x, const ImplicitOptions& opt) {
  const int d = x.degree();
  if (x.field().is_rational() && d >= 4 && !opt.force)
    throw Error(Errc::budget, "implicitization over Q is limited to degree <= 3 without the force flag");
  return opt.force ? std::max(opt.max_degree, d * d) : opt.max_degree;
}

void finish_validation(DualCurveResult& r, const ImplicitOptions& opt) {
  r.validation.expected_degree = opt.expected_degree;
  if (opt.expected_degree) r.validation.degree_consistent = *opt.expected_degree == r.degree;
}

}  // namespace

MultiPoly polar_curve(const PlaneCurve& x, const ProjectivePoint& o) {
  MultiPoly r(x.field(), primal_vars());
  for (std::size_t i = 0; i < 3; ++i) r += o[i] * x.gradient()[i];
  return r;
}

MultiPoly normal_polar(const PlaneCurve& x, const ProjectivePoint& o, const MetricStructure& m) {
  const NormalMap nm = normal_map(x, m);
  MultiPoly r(x.field(), primal_vars());
  for (std::size_t i = 0; i < 3; ++i) r += o[i] * nm.psi[i];
  return r;
}

CountResult curve_class(const PlaneCurve& x, Rng& rng, int trials) {
  if (strange_point(x)) {
    CountResult r;
    r.value = 1;
    r.samples = {1};
    r.annotation = "strange";
    return r;
  }
  std::vector<int> values;
  const std::vector<MultiPoly> excl(x.gradient().begin(), x.gradient().end());
  for (int i = 0; i < trials; ++i) {
    const ProjectivePoint o = random_center(x, nullptr, rng);
    const MultiPoly g = polar_curve(x, o);
    values.push_back(count_intersections(x.equation(), g, excl, rng, centers_for(x.field())));
  }
  CountResult r = majority(values);
  if (!x.hypotheses_ok()) r.annotation = "outside char hypotheses";
  return r;
}

CountResult normal_class_count(const PlaneCurve& x, const MetricStructure& m, Rng& rng, int trials) {
  check_metric_compatible(x, m);
  const NormalMap nm = normal_map(x, m);
  const std::vector<MultiPoly> excl(nm.psi.begin(), nm.psi.end());
  std::vector<int> values;
  int degenerate = 0;
  while (static_cast<int>(values.size()) < trials) {
    const ProjectivePoint o = random_center(x, &m, rng);
    MultiPoly g(x.field(), primal_vars());
    for (std::size_t i = 0; i < 3; ++i) g += o[i] * nm.psi[i];
    if (g.is_zero()) {
      if (++degenerate > 50) throw Error(Errc::degenerate, "normal polar vanishes identically");
      continue;
    }
    values.push_back(count_intersections(x.equation(), g, excl, rng, centers_for(x.field())));
  }
  CountResult r = majority(values);
  if (strange_point(x)) r.annotation = "non-reflexive";
  else if (!x.hypotheses_ok()) r.annotation = "outside char hypotheses";
  return r;
}

MultiPoly implicit_image(const MultiPoly& f, const PolyVec& phi, int max_degree, const Deadline& deadline) {
  const FieldSpec fs = f.field();
  if (phi[0].is_zero() && phi[1].is_zero() && phi[2].is_zero())
    throw Error(Errc::degenerate, "map is identically zero");
  PolyVec red;
  for (std::size_t i = 0; i < 3; ++i) red[i] = normal_form(phi[i], f);
  std::map<Monomial, MultiPoly> prev{{0, MultiPoly::constant(fs, f.vars(), Scalar::one(fs))}};
  for (int deg = 1; deg <= max_degree; ++deg) {
    deadline.check("implicitization");
    std::map<Monomial, MultiPoly> cur;
    const auto monos = monomials_of_degree(3, static_cast<unsigned>(deg));
    for (Monomial mono : monos) {
      std::size_t i = 0;
      while (exponent_of(mono, i) == 0) ++i;
      const MultiPoly& parent = prev.at(mono - monomial_of(i, 1));
      cur.emplace(mono, normal_form(parent * red[i], f));
    }
    std::map<Monomial, std::size_t, std::greater<>> rows;
    for (const auto& [mono, p] : cur)
      for (const auto& t : p.terms()) rows.emplace(t.mono, 0);
    std::size_t idx = 0;
    for (auto& [mono, i] : rows) i = idx++;
    Matrix mat(rows.size(), std::vector<Scalar>(monos.size(), Scalar::zero(fs)));
    for (std::size_t c = 0; c < monos.size(); ++c) {
      for (const auto& t : cur.at(monos[c]).terms()) mat[rows.at(t.mono)][c] = t.coeff;
    }
    const auto ker = kernel(std::move(mat), monos.size(), fs);
    if (!ker.empty()) {
      if (ker.size() > 1) throw Error(Errc::degenerate, "image of the map is not a curve");
      std::vector<MultiPoly::Term> terms;
      for (std::size_t c = 0; c < monos.size(); ++c) {
        if (!ker[0][c].is_zero()) terms.push_back({monos[c], ker[0][c]});
      }
      return MultiPoly(fs, dual_vars(), std::move(terms)).canonical();
    }
    prev = std::move(cur);
  }
  throw Error(Errc::budget, "no implicit equation of degree <= " + std::to_string(max_degree));
}

DualCurveResult dual_curve(const PlaneCurve& x, Rng& rng, const ImplicitOptions& opt) {
  DualCurveResult r;
  r.poly = implicit_image(x.equation(), x.gradient(), degree_cap(x, opt), opt.deadline);
  r.degree = r.poly.total_degree();
  if (strange_point(x)) r.annotation = "strange";
  check_samples(x, nullptr, Target::dual, rng, opt.samples, r);
  if (x.degree() <= 3) resultant_cross_check(x, nullptr, Target::dual, rng, r);
  finish_validation(r, opt);
  return r;
}

DualCurveResult normal_curve(const PlaneCurve& x, const MetricStructure& m, Rng& rng, const ImplicitOptions& opt) {
  check_metric_compatible(x, m);
  DualCurveResult r;
  const NormalMap nm = normal_map(x, m);
  r.poly = implicit_image(x.equation(), nm.psi, degree_cap(x, opt), opt.deadline);
  r.degree = r.poly.total_degree();
  if (strange_point(x)) r.annotation = "strange";
  else if (is_circular(x, m)) r.annotation = "circular";
  check_samples(x, &m, Target::normal, rng, opt.samples, r);
  if (x.degree() <= 3) resultant_cross_check(x, &m, Target::normal, rng, r);
  finish_validation(r, opt);
  return r;
}

BinaryForm normal_feet_form(const PlaneCurve& x, const ProjectiveLine& l, const MetricStructure& m) {
  if (l == m.h_inf()) throw Error(Errc::invalid_argument, "fiber over the line at infinity");
  const auto b = l.basis();
  const int d = x.degree();
  const BinaryForm a = restrict_form(x.equation(), b[0], b[1], d);
  if (a.is_zero()) throw Error(Errc::degenerate, "line " + l.to_string() + " is a component of the curve");
  const NormalMap nm = normal_map(x, m);
  MultiPoly ln(x.field(), primal_vars());
  for (std::size_t i = 0; i < 3; ++i) ln += l[i] * nm.n[i];
  return gcd(a, restrict_form(ln, b[0], b[1], d - 1));
}

FiberReport eta_fiber_count(const PlaneCurve& x, const ProjectiveLine& l, const MetricStructure& m) {
  const BinaryForm feet = normal_feet_form(x, l, m);
  const auto b = l.basis();
  const int d = x.degree();
  const NormalMap nm = normal_map(x, m);
  BinaryForm bad = feet;
  for (const auto& p : nm.psi) bad = gcd(bad, restrict_form(p, b[0], b[1], d));
  FiberReport r{l};
  r.total_closure_points = distinct_root_count(feet);
  r.regular_points = r.total_closure_points - distinct_root_count(bad);
  return r;
}

int tangent_fiber_count(const PlaneCurve& x, const ProjectiveLine& t) {
  const auto b = t.basis();
  const int d = x.degree();
  const BinaryForm a = restrict_form(x.equation(), b[0], b[1], d);
  if (a.is_zero()) throw Error(Errc::degenerate, "line " + t.to_string() + " is a component of the curve");
  const PolyVec& g = x.gradient();
  // grad F(q) proportional to t
  PolyVec c{t[2] * g[1] - t[1] * g[2], t[0] * g[2] - t[2] * g[0], t[1] * g[0] - t[0] * g[1]};
  BinaryForm touch = a;
  for (const auto& p : c) touch = gcd(touch, restrict_form(p, b[0], b[1], d - 1));
  BinaryForm sing = touch;
  for (const auto& p : g) sing = gcd(sing, restrict_form(p, b[0], b[1], d - 1));
  return distinct_root_count(touch) - distinct_root_count(sing);
}

std::uint64_t random_prime(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi - 1);
  for (;;) {
    const std::uint64_t p = dist(rng);
    if (p > 2 && is_prime_u64(p)) return p;
  }
}

std::vector<std::pair<ProjectivePoint, ProjectiveLine>> sample_normal_lines(const PlaneCurve& x,
                                                                            const MetricStructure& m, int count,
                                                                            Rng& rng) {
  const auto pts = sample_regular_points(x, count, rng, &m).points;
  std::vector<std::pair<ProjectivePoint, ProjectiveLine>> out;
  if (pts.empty()) return out;
  for (int i = 0; i < count; ++i) {
    const ProjectivePoint& p = pts[static_cast<std::size_t>(i) % pts.size()];
    out.emplace_back(p, normal_line(x, p, m));
  }
  return out;
}

namespace {

template <class Fn>
SeparableDegree over_primes(const PlaneCurve& x, const MetricStructure* m, Rng& rng, Fn per_field) {
  SeparableDegree r;
  if (x.field().is_prime()) {
    per_field(x, m, r);
    return r;
  }
  int attempts = 0;
  while (r.primes.size() < 3) {
    if (++attempts > 60) throw Error(Errc::budget, "no usable reduction primes");
    const std::uint64_t p = random_prime(rng, std::max<std::uint64_t>(1000, x.degree() + 1), 10000);
    if (std::find(r.primes.begin(), r.primes.end(), p) != r.primes.end()) continue;
    const FieldSpec fp = FieldSpec::prime(p);
    std::optional<PlaneCurve> xp;
    std::optional<MetricStructure> mp;
    try {
      xp.emplace(x.reduce_mod(fp));
      if (m) {
        mp.emplace(m->reduce_mod(fp));
        check_metric_compatible(*xp, *mp);
      }
    } catch (const Error&) {
      continue;
    }
    SeparableDegree local;
    per_field(*xp, mp ? &*mp : nullptr, local);
    r.primes.push_back(p);
    r.per_prime.push_back(local.fiber_e);
    r.samples += local.samples;
    r.distinct_lines += local.distinct_lines;
  }
  r.fiber_e = r.per_prime[0];
  for (int v : r.per_prime) {
    if (v != r.fiber_e) {
      std::string all;
      for (int w : r.per_prime) all += (all.empty() ? "" : ",") + std::to_string(w);
      throw Error(Errc::unstable, "fiber counts disagree across primes: " + all);
    }
  }
  return r;
}

int count_distinct_lines(const std::vector<ProjectiveLine>& lines) {
  std::vector<ProjectiveLine> seen;
  for (const auto& l : lines) {
    if (std::find(seen.begin(), seen.end(), l) == seen.end()) seen.push_back(l);
  }
  return static_cast<int>(seen.size());
}

}  // namespace

SeparableDegree separable_degree(const PlaneCurve& x, const MetricStructure& m, Rng& rng, int samples,
                                 std::optional<int> class_value, std::optional<int> normal_degree) {
  check_metric_compatible(x, m);
  samples = std::max(samples, 7);
  SeparableDegree r = over_primes(x, &m, rng, [&](const PlaneCurve& c, const MetricStructure* mm, SeparableDegree& out) {
    const auto lines = sample_normal_lines(c, *mm, samples, rng);
    if (lines.empty()) throw Error(Errc::budget, "no general points found over " + c.field().name());
    int best = std::numeric_limits<int>::max();
    std::vector<ProjectiveLine> ls;
    for (const auto& [p, l] : lines) {
      best = std::min(best, eta_fiber_count(c, l, *mm).regular_points);
      ls.push_back(l);
    }
    out.fiber_e = best;
    out.samples = static_cast<int>(lines.size());
    out.distinct_lines = count_distinct_lines(ls);
  });
  if (class_value && normal_degree && *normal_degree > 0)
    r.ratio_deg = mpq_class(x.degree() + *class_value, *normal_degree);
  if (r.ratio_deg) r.ratio_deg->canonicalize();
  return r;
}

SeparableDegree tangent_separable_degree(const PlaneCurve& x, Rng& rng, int samples) {
  samples = std::max(samples, 7);
  return over_primes(x, nullptr, rng, [&](const PlaneCurve& c, const MetricStructure*, SeparableDegree& out) {
    const auto pts = sample_regular_points(c, samples, rng).points;
    if (pts.empty()) throw Error(Errc::budget, "no regular points found over " + c.field().name());
    int best = std::numeric_limits<int>::max();
    std::vector<ProjectiveLine> ls;
    for (int i = 0; i < samples; ++i) {
      const ProjectiveLine t = tangent_line(c, pts[static_cast<std::size_t>(i) % pts.size()]);
      best = std::min(best, tangent_fiber_count(c, t));
      ls.push_back(t);
    }
    out.fiber_e = best;
    out.samples = samples;
    out.distinct_lines = count_distinct_lines(ls);
  });
}

EqualityEvidence normal_curves_equal(const PlaneCurve& x, const PlaneCurve& y, const MetricStructure& m, Rng& rng,
                                     int samples, const DualCurveResult* hx, const DualCurveResult* hy) {
  if (!(x.field() == y.field())) throw Error(Errc::field_mismatch, "curves over different fields");
  check_metric_compatible(x, m);
  check_metric_compatible(y, m);
  EqualityEvidence ev;
  samples = std::max(samples, 20);
  // first normal line of a that is not normal to b
  auto probe = [&](const PlaneCurve& a, const PlaneCurve& b, const MetricStructure& mm, int& used) -> bool {
    const auto lines = sample_normal_lines(a, mm, samples, rng);
    used += static_cast<int>(lines.size());
    for (const auto& [p, l] : lines) {
      if (eta_fiber_count(b, l, mm).regular_points == 0) {
        ev.witness = l;
        ev.witness_point = p;
        return true;
      }
    }
    return false;
  };
  auto both = [&](const PlaneCurve& a, const PlaneCurve& b, const MetricStructure& mm) {
    if (probe(a, b, mm, ev.samples_first)) {
      ev.witness_side = "first";
      return true;
    }
    if (probe(b, a, mm, ev.samples_second)) {
      ev.witness_side = "second";
      return true;
    }
    return false;
  };
  bool found = false;
  if (x.field().is_prime()) {
    found = both(x, y, m);
  } else {
    found = both(x, y, m);
    for (int attempt = 0; !found && attempt < 20; ++attempt) {
      const std::uint64_t p = random_prime(rng, 10007, 65521);
      const FieldSpec fp = FieldSpec::prime(p);
      try {
        const PlaneCurve xp = x.reduce_mod(fp), yp = y.reduce_mod(fp);
        const MetricStructure mp = m.reduce_mod(fp);
        check_metric_compatible(xp, mp);
        check_metric_compatible(yp, mp);
        found = both(xp, yp, mp);
        if (found) ev.prime = p;
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::degenerate && e.code() != Errc::hypothesis && e.code() != Errc::division_by_zero &&
            e.code() != Errc::invalid_argument)
          throw;
      }
    }
  }
  if (ev.samples_first == 0 && ev.samples_second == 0 && !(hx && hy))
    throw Error(Errc::budget, "no regular points found for the comparison");
  ev.equal = !found;
  if (hx && hy) {
    ev.exact = true;
    const bool same = hx->poly == hy->poly;
    if (same && found) throw Error(Errc::internal, "implicit equations agree but a sampled normal line separates them");
    ev.equal = same;
  }
  if (x.field().is_prime() && ev.witness) ev.prime = x.field().characteristic();
  return ev;
}

}  // namespace ng
