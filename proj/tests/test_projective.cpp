/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <random>

#include "normalgeom/error.hpp"
#include "normalgeom/projective.hpp"
#include "normalgeom/properties.hpp"

using namespace ng;

namespace {

Vec3 random_vec(FieldSpec f, Rng& rng) {
  for (;;) {
    Vec3 v = make_vec3(f, 0, 0, 0);
    for (auto& c : v) c = sample_integer(f, rng, 50);
    if (!is_zero_vec(v)) return v;
  }
}

}  // namespace

TEST_CASE("points and lines are equal up to scaling") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(ProjectivePoint(make_vec3(q, 2, 4, 6)) == ProjectivePoint(make_vec3(q, -1, -2, -3)));
  CHECK_FALSE(ProjectivePoint(make_vec3(q, 1, 2, 3)) == ProjectivePoint(make_vec3(q, 1, 2, 4)));
  CHECK(ProjectiveLine(make_vec3(q, 0, 0, 5)) == ProjectiveLine(make_vec3(q, 0, 0, 1)));
  CHECK_THROWS_AS(ProjectivePoint(make_vec3(q, 0, 0, 0)), Error);
  CHECK(ProjectivePoint(make_vec3(q, 2, 4, 6)).normalized() == ProjectivePoint(make_vec3(q, 1, 2, 3)));
}

TEST_CASE("join and meet are incident") {
  Rng rng(31);
  for (std::uint64_t c : {0ull, 7ull, 10007ull}) {
    const FieldSpec f = FieldSpec::from_characteristic(c);
    for (int i = 0; i < 1000; ++i) {
      const ProjectivePoint a(random_vec(f, rng)), b(random_vec(f, rng));
      if (a == b) continue;
      const ProjectiveLine l = join(a, b);
      CHECK(l.contains(a));
      CHECK(l.contains(b));
      const ProjectiveLine m(random_vec(f, rng));
      if (m == l) continue;
      const ProjectivePoint x = meet(l, m);
      CHECK(l.contains(x));
      CHECK(m.contains(x));
      const auto basis = l.basis();
      CHECK(l.contains(ProjectivePoint(basis[0])));
      CHECK(l.contains(ProjectivePoint(basis[1])));
      CHECK_FALSE(proportional(basis[0], basis[1]));
    }
  }
}

TEST_CASE("Euclidean orthogonality") {
  const FieldSpec q = FieldSpec::rationals();
  const MetricStructure m = MetricStructure::euclidean(q);
  CHECK(m.perp(ProjectivePoint(make_vec3(q, 1, 0, 0))) == ProjectivePoint(make_vec3(q, 0, 1, 0)));
  CHECK(m.perp(ProjectivePoint(make_vec3(q, 1, 2, 0))) == ProjectivePoint(make_vec3(q, -2, 1, 0)));
  CHECK(m.h_inf() == ProjectiveLine(make_vec3(q, 0, 0, 1)));
  // a point off the line at infinity has no orthogonal direction
  CHECK_THROWS_AS(m.perp(ProjectivePoint(make_vec3(q, 1, 0, 1))), Error);
}

TEST_CASE("orthogonality for a non-standard metric") {
  const FieldSpec q = FieldSpec::rationals();
  const MultiPoly form = parse_poly("x^2 + 2*y^2 + x*z", primal_vars(), q);
  const MetricStructure m(ProjectiveLine(make_vec3(q, 1, 1, 1)), form);
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const auto b = m.h_inf().basis();
    const Scalar s = sample_integer(q, rng, 9), t = sample_integer(q, rng, 9);
    if (s.is_zero() && t.is_zero()) continue;
    Vec3 a = b[0];
    for (std::size_t k = 0; k < 3; ++k) a[k] = s * b[0][k] + t * b[1][k];
    const ProjectivePoint pa(a);
    const ProjectivePoint pb = m.perp(pa);
    CHECK(m.h_inf().contains(pb));
    // Q(a, b) computed directly from the form's polarization
    Scalar direct = a[0] * pb[0] + Scalar(q, 2) * a[1] * pb[1] + (a[0] * pb[2] + a[2] * pb[0]) / Scalar(q, 2);
    CHECK(direct.is_zero());
    CHECK(m.perp(pb) == pa);
  }
}

TEST_CASE("metric validation") {
  const FieldSpec q = FieldSpec::rationals();
  const ProjectiveLine z(make_vec3(q, 0, 0, 1));
  CHECK_THROWS_AS(MetricStructure(z, parse_poly("x^2", primal_vars(), q)), Error);
  CHECK_THROWS_AS(MetricStructure(z, parse_poly("x^2 + y", primal_vars(), q)), Error);
  CHECK_THROWS_AS(MetricStructure(z, parse_poly("x^2 + y^2", primal_vars(), FieldSpec::prime(5))), Error);
  CHECK_THROWS_AS(MetricStructure(z, parse_poly("x^2 + 2*x*y + y^2 + z^2", primal_vars(), q)), Error);
  // isotropic but nondegenerate over F_5
  CHECK_NOTHROW(MetricStructure(ProjectiveLine(make_vec3(FieldSpec::prime(5), 0, 0, 1)),
                                parse_poly("x^2 + y^2", primal_vars(), FieldSpec::prime(5))));
  CHECK_NOTHROW(MetricStructure(ProjectiveLine(make_vec3(FieldSpec::prime(7), 0, 0, 1)),
                                parse_poly("x^2 + y^2", primal_vars(), FieldSpec::prime(7))));
}

TEST_CASE("projectivities act compatibly on points and lines") {
  Rng rng(33);
  const FieldSpec f = FieldSpec::prime(1009);
  for (int i = 0; i < 300; ++i) {
    Mat3 a;
    for (auto& row : a) row = random_vec(f, rng);
    if (det3(a).is_zero()) continue;
    const Projectivity g(a);
    const ProjectivePoint p(random_vec(f, rng));
    const ProjectiveLine l(random_vec(f, rng));
    CHECK(l.contains(p) == ProjectiveLine(g.apply_line(l.coeffs())).contains(ProjectivePoint(g.apply_point(p.coords()))));
    const ProjectiveLine through = join(p, ProjectivePoint(random_vec(f, rng)));
    CHECK(ProjectiveLine(g.apply_line(through.coeffs())).contains(ProjectivePoint(g.apply_point(p.coords()))));
    const MultiPoly form = parse_poly("x^2 + 3*y*z - 5*z^2", primal_vars(), f);
    CHECK(g.push_forward(form).evaluate(g.apply_point(p.coords())) == form.evaluate(p.coords()));
  }
}

TEST_CASE("random isometries preserve the metric") {
  Rng rng(34);
  for (std::uint64_t c : {0ull, 10007ull}) {
    const FieldSpec f = FieldSpec::from_characteristic(c);
    for (int i = 0; i < 50; ++i) {
      const MetricStructure m = random_metric(f, rng);
      const Projectivity g = random_isometry(m, rng);
      CHECK(ProjectiveLine(g.apply_line(m.h_inf().coeffs())) == m.h_inf());
      const auto b = m.h_inf().basis();
      const Scalar q0 = m.bilinear(b[0], b[0]);
      const Scalar scale = q0.is_zero() ? m.bilinear(b[0], b[1]) : q0;
      const Scalar gscale =
          q0.is_zero() ? m.bilinear(g.apply_point(b[0]), g.apply_point(b[1])) : m.bilinear(g.apply_point(b[0]), g.apply_point(b[0]));
      REQUIRE_FALSE(scale.is_zero());
      const Scalar lambda = gscale / scale;
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s)
          CHECK(m.bilinear(g.apply_point(b[r]), g.apply_point(b[s])) == lambda * m.bilinear(b[r], b[s]));
    }
  }
}

TEST_CASE("orthogonality is an involution on the line at infinity") {
  Rng rng(35);
  const PropertyOutcome r = check_perp(rng, 1000, false);
  CHECK(r.cases == 1000);
  CHECK_MESSAGE(r.passed(), r.first_failure);
}

TEST_CASE("the injected fault breaks the involution check") {
  Rng rng(36);
  const PropertyOutcome r = check_perp(rng, 200, true);
  CHECK(r.failures > 0);
}
