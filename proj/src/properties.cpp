/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "normalgeom/properties.hpp"

#include <array>

namespace ng {

namespace {

constexpr std::array<std::uint64_t, 8> kPrimes = {3, 5, 7, 101, 1009, 10007, 65521, 2305843009213693951ull};

FieldSpec random_field(Rng& rng, bool allow_q = true) {
  std::uniform_int_distribution<std::size_t> pick(0, kPrimes.size() - (allow_q ? 0 : 1));
  const std::size_t i = pick(rng);
  return i == kPrimes.size() ? FieldSpec::rationals() : FieldSpec::prime(kPrimes[i]);
}

std::string show(const Scalar& a) { return a.to_string(); }

MultiPoly random_form(FieldSpec f, int degree, Rng& rng, long bound) {
  std::vector<MultiPoly::Term> terms;
  std::bernoulli_distribution keep(0.7);
  for (Monomial mono : monomials_of_degree(3, static_cast<unsigned>(degree))) {
    if (keep(rng)) terms.push_back({mono, sample_integer(f, rng, bound)});
  }
  return MultiPoly(f, primal_vars(), std::move(terms));
}

MultiPoly univariate(FieldSpec f, const std::vector<long>& c) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i) terms.push_back({monomial_of(0, static_cast<unsigned>(i)), Scalar(f, c[i])});
  return MultiPoly(f, {"x"}, std::move(terms));
}

MultiPoly random_univariate(FieldSpec f, int degree, Rng& rng) {
  std::vector<MultiPoly::Term> terms;
  for (int i = 0; i < degree; ++i) terms.push_back({monomial_of(0, static_cast<unsigned>(i)), sample_uniform(f, rng, 9)});
  terms.push_back({monomial_of(0, static_cast<unsigned>(degree)), sample_nonzero(f, rng, 9)});
  return MultiPoly(f, {"x"}, std::move(terms));
}

Scalar constant_of(const MultiPoly& p) { return p.is_zero() ? Scalar::zero(p.field()) : p.coefficient(0); }

bool share_root_in_field(const MultiPoly& a, const MultiPoly& b) {
  const FieldSpec f = a.field();
  for (std::uint64_t r = 0; r < f.characteristic(); ++r) {
    const std::array<Scalar, 1> v{Scalar::from_residue(f, r)};
    if (a.evaluate(v).is_zero() && b.evaluate(v).is_zero()) return true;
  }
  return false;
}

// monic polynomials of degree 1 and 2 over F_p
std::vector<MultiPoly> small_monics(FieldSpec f) {
  const long p = static_cast<long>(f.characteristic());
  std::vector<MultiPoly> out;
  for (long a = 0; a < p; ++a) out.push_back(univariate(f, {a, 1}));
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b) out.push_back(univariate(f, {a, b, 1}));
  return out;
}

}  // namespace

void PropertyOutcome::record(bool ok, const std::string& what) {
  ++cases;
  if (!ok) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
}

PropertyOutcome check_field_axioms(Rng& rng, int cases) {
  PropertyOutcome out;
  out.name = "field axioms";
  for (int i = 0; i < cases; ++i) {
    const FieldSpec f = random_field(rng);
    const Scalar a = sample_uniform(f, rng, 1000), b = sample_uniform(f, rng, 1000), c = sample_uniform(f, rng, 1000);
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    bool ok = a + b == b + a && (a + b) + c == a + (b + c) && a * b == b * a && (a * b) * c == a * (b * c) &&
              a * (b + c) == a * b + a * c && a + zero == a && a * one == a && a - a == zero && -(-a) == a &&
              (a - b) + b == a;
    if (!a.is_zero()) ok = ok && a * a.inverse() == one && (b / a) * a == b;
    out.record(ok, f.name() + " a=" + show(a) + " b=" + show(b) + " c=" + show(c));
  }
  return out;
}

PropertyOutcome check_euler_identity(Rng& rng, int cases) {
  PropertyOutcome out;
  out.name = "Euler identity";
  std::uniform_int_distribution<int> deg(1, 6);
  for (int i = 0; i < cases; ++i) {
    const FieldSpec f = random_field(rng);
    const int d = deg(rng);
    const MultiPoly p = random_form(f, d, rng, 50);
    MultiPoly lhs(f, primal_vars());
    for (std::size_t v = 0; v < 3; ++v) lhs += MultiPoly::variable(f, primal_vars(), v) * p.derivative(v);
    out.record(lhs == Scalar(f, d) * p, f.name() + " F=" + p.to_string());
  }
  return out;
}

PropertyOutcome check_resultants(Rng& rng, int cases) {
  PropertyOutcome out;
  out.name = "resultants";
  for (std::uint64_t p : {5ull, 7ull}) {
    const FieldSpec f = FieldSpec::prime(p);
    const auto monics = small_monics(f);
    for (const auto& a : monics) {
      for (const auto& b : monics) {
        const bool res_zero = constant_of(resultant(a, b, 0)).is_zero();
        const bool common = share_root_in_field(a, b);
        const int g = gcd(to_upoly(a, 0), to_upoly(b, 0)).degree();
        // degree <= 2 factors split over F_p^2, so a field root is not required
        out.record(res_zero == (g >= 1) && (!common || res_zero), f.name() + " f=" + a.to_string() + " g=" + b.to_string());
      }
    }
  }
  std::uniform_int_distribution<int> deg(1, 4);
  for (int i = 0; i < cases; ++i) {
    const FieldSpec f = i % 3 == 2 ? FieldSpec::rationals() : FieldSpec::prime(i % 3 == 0 ? 5 : 7);
    const MultiPoly a = random_univariate(f, deg(rng), rng), b = random_univariate(f, deg(rng), rng),
                    c = random_univariate(f, deg(rng), rng);
    const Scalar rab = constant_of(resultant(a * b, c, 0));
    const Scalar ra = constant_of(resultant(a, c, 0)), rb = constant_of(resultant(b, c, 0));
    bool ok = rab == ra * rb;
    ok = ok && ra.is_zero() == (gcd(to_upoly(a, 0), to_upoly(c, 0)).degree() >= 1);
    if (f.is_prime()) ok = ok && (!share_root_in_field(a, c) || ra.is_zero());
    if (f.is_rational()) ok = ok && constant_of(resultant_sylvester(a, c, 0)) == ra;
    out.record(ok, f.name() + " f=" + a.to_string() + " g=" + b.to_string() + " h=" + c.to_string());
  }
  return out;
}

MetricStructure random_metric(FieldSpec f, Rng& rng) {
  const auto vars = primal_vars();
  for (;;) {
    Vec3 h = make_vec3(f, 0, 0, 0);
    for (auto& c : h) c = sample_integer(f, rng, 5);
    if (is_zero_vec(h)) continue;
    MultiPoly q(f, vars);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i; j < 3; ++j) {
        q += MultiPoly::term(f, vars, sample_integer(f, rng, 5), monomial_of(i, 1) + monomial_of(j, 1));
      }
    }
    try {
      return MetricStructure(ProjectiveLine(h), q);
    } catch (const Error&) {
    }
  }
}

PropertyOutcome check_perp(Rng& rng, int cases, bool broken) {
  PropertyOutcome out;
  out.name = "perp involution";
  for (int i = 0; i < cases; ++i) {
    const FieldSpec f = random_field(rng);
    MetricStructure m = random_metric(f, rng);
    if (broken) m = m.with_broken_perp();
    const auto basis = m.h_inf().basis();
    Scalar s = sample_uniform(f, rng, 20), t = sample_uniform(f, rng, 20);
    if (s.is_zero() && t.is_zero()) s = Scalar::one(f);
    Vec3 a = basis[0];
    for (std::size_t k = 0; k < 3; ++k) a[k] = s * basis[0][k] + t * basis[1][k];
    const ProjectivePoint pa(a);
    const ProjectivePoint b = m.perp(pa);
    const bool ok = m.perp(b) == pa && m.bilinear(a, b.coords()).is_zero() && m.h_inf().contains(b);
    out.record(ok, f.name() + " h=" + m.h_inf().to_string() + " q=" + m.q_form().to_string() + " a=" + pa.to_string());
  }
  return out;
}

PlaneCurve random_curve(FieldSpec f, int degree, Rng& rng) {
  for (;;) {
    MultiPoly p = random_form(f, degree, rng, 20);
    if (p.is_zero()) continue;
    try {
      return PlaneCurve(std::move(p));
    } catch (const Error&) {
    }
  }
}

namespace {

// general points on random curves over mid-sized prime fields
template <class Check>
PropertyOutcome over_sampled_points(const char* name, Rng& rng, int cases, Check check) {
  PropertyOutcome out;
  out.name = name;
  std::uniform_int_distribution<int> deg(2, 4);
  constexpr std::array<std::uint64_t, 3> primes = {101, 1009, 10007};
  int round = 0;
  while (out.cases < cases) {
    const FieldSpec f = FieldSpec::prime(primes[static_cast<std::size_t>(round++) % primes.size()]);
    const MetricStructure m = MetricStructure::euclidean(f);
    const PlaneCurve x = random_curve(f, deg(rng), rng);
    try {
      check_metric_compatible(x, m);
    } catch (const Error&) {
      continue;
    }
    const PointSample s = sample_regular_points(x, 25, rng, &m);
    for (const auto& p : s.points) {
      if (out.cases >= cases) break;
      check(out, x, p, m);
    }
  }
  return out;
}

}  // namespace

PropertyOutcome check_incidence(Rng& rng, int cases) {
  return over_sampled_points("tangent and normal incidence", rng, cases,
                             [](PropertyOutcome& out, const PlaneCurve& x, const ProjectivePoint& p,
                                const MetricStructure& m) {
                               const bool ok = tangent_line(x, p).contains(p) && normal_line(x, p, m).contains(p);
                               out.record(ok, x.field().name() + " F=" + x.to_string() + " p=" + p.to_string());
                             });
}

PropertyOutcome check_isometry_equivariance(Rng& rng, int cases) {
  return over_sampled_points("isometry equivariance", rng, cases,
                             [&rng](PropertyOutcome& out, const PlaneCurve& x, const ProjectivePoint& p,
                                    const MetricStructure& m) {
                               const Projectivity g = random_isometry(m, rng);
                               const PlaneCurve gx(g.push_forward(x.equation()));
                               const ProjectivePoint gp(g.apply_point(p.coords()));
                               const ProjectiveLine expected(g.apply_line(normal_line(x, p, m).coeffs()));
                               const bool ok = gx.is_regular(gp) && normal_line(gx, gp, m) == expected;
                               out.record(ok, x.field().name() + " F=" + x.to_string() + " p=" + p.to_string());
                             });
}

}  // namespace ng
