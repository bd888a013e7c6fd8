/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <random>
#include <set>

#include "normalgeom/curve.hpp"
#include "normalgeom/error.hpp"
#include "normalgeom/properties.hpp"

using namespace ng;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

PlaneCurve curve(const char* s, FieldSpec f = kQ) { return PlaneCurve::parse(s, f); }

ProjectivePoint pt(long a, long b, long c, FieldSpec f = kQ) { return ProjectivePoint(make_vec3(f, a, b, c)); }
ProjectiveLine ln(long a, long b, long c, FieldSpec f = kQ) { return ProjectiveLine(make_vec3(f, a, b, c)); }

// singular points with coordinates in F_p, by enumeration
bool has_rational_singular_point(const PlaneCurve& x) {
  const FieldSpec f = x.field();
  for (const Vec3& v : all_points(f)) {
    bool sing = x.value_at(v).is_zero();
    for (const auto& g : x.gradient()) sing = sing && g.evaluate(v).is_zero();
    if (sing) return true;
  }
  return false;
}

Errc code_of(const char* text, FieldSpec f = kQ) {
  try {
    (void)PlaneCurve::parse(text, f);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST_CASE("curve hypotheses are enforced") {
  CHECK(code_of("x + y") == Errc::invalid_argument);
  CHECK(code_of("x^2 + y") == Errc::invalid_argument);
  CHECK(code_of("0") == Errc::invalid_argument);
  CHECK(code_of("x^2 - 2*x*y + y^2") == Errc::invalid_argument);
  CHECK(code_of("x^3 - 2*x^2*y + x*y^2") == Errc::invalid_argument);
  CHECK(code_of("x^3 + y^3 + z^3", FieldSpec::prime(3)) == Errc::invalid_argument);
  CHECK(code_of("x^2 + y^2 +") == Errc::parse);
  CHECK_NOTHROW(curve("x*y"));
  CHECK_NOTHROW(curve("x^3 + y^3 + z^3", FieldSpec::prime(7)));
}

TEST_CASE("the line at infinity may not be a component") {
  const MetricStructure m = MetricStructure::euclidean(kQ);
  try {
    check_metric_compatible(curve("x^2*z + y^2*z - 4*z^3"), m);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::hypothesis);
  }
  CHECK_NOTHROW(check_metric_compatible(curve("x^2 + 2*y^2 - z^2"), m));
}

TEST_CASE("tangent and normal lines of an ellipse") {
  const PlaneCurve x = curve("x^2 + 2*y^2 - z^2");
  const MetricStructure m = MetricStructure::euclidean(kQ);
  const ProjectivePoint p = pt(1, 2, 3);
  REQUIRE(x.contains(p));
  CHECK(x.is_regular(p));
  CHECK(tangent_line(x, p) == ln(1, 4, -3));
  // through (1/3, 2/3) along the gradient direction (1, 4)
  CHECK(normal_line(x, p, m) == ln(12, -3, -2));
  CHECK(normal_point(x, p, m) == pt(1, 4, 0));
  CHECK(contact_order(x, p) == 2);
  CHECK(multiplicity_at(x, p) == 1);
  CHECK(multiplicity_at(x, pt(1, 1, 1)) == 0);
}

TEST_CASE("multiplicities and contact orders") {
  CHECK(multiplicity_at(curve("y^2*z - x^3"), pt(0, 0, 1)) == 2);
  CHECK(multiplicity_at(curve("y^2*z - x^3 - x^2*z"), pt(0, 0, 1)) == 2);
  CHECK(multiplicity_at(curve("x^4 + y^4 - x*y*z^2"), pt(0, 0, 1)) == 2);
  CHECK(multiplicity_at(curve("x^3 + y^3 - x*y*z"), pt(0, 0, 1)) == 2);
  CHECK(multiplicity_at(curve("x^3 + y^3"), pt(0, 0, 1)) == 3);
  // flex of the Fermat cubic
  CHECK(contact_order(curve("x^3 + y^3 + z^3"), pt(1, -1, 0)) == 3);
  const PlaneCurve fam = strange_family(3, 1, 2);
  CHECK(multiplicity_at(fam, pt(1, 0, 0, fam.field())) == 3);
  CHECK(multiplicity_at(fam, pt(0, 1, 0, fam.field())) == 2);
}

TEST_CASE("strange points") {
  const PlaneCurve fam = strange_family(3, 1, 2);
  CHECK(fam.degree() == 5);
  const auto s = strange_point(fam);
  REQUIRE(s.has_value());
  CHECK(*s == pt(0, 1, 0, fam.field()));
  CHECK_FALSE(strange_point(curve("x^2 + 2*y^2 - z^2")).has_value());
  CHECK_FALSE(strange_point(curve("x^3 + y^3 + z^3", FieldSpec::prime(7))).has_value());
  // y z - x^2 over F_p is not strange; y^(p-1) z - x^p is, with centre (1:0:0)
  CHECK_FALSE(strange_point(curve("y*z - x^2", FieldSpec::prime(3))).has_value());
  const auto s2 = strange_point(curve("y^2*z - x^3", FieldSpec::prime(3)));
  REQUIRE(s2.has_value());
  CHECK(*s2 == pt(1, 0, 0, FieldSpec::prime(3)));
}

TEST_CASE("family parameters are validated") {
  CHECK_THROWS_AS(strange_family(3, 0, 2), Error);
  CHECK_THROWS_AS(strange_family(3, 1, 3), Error);
  CHECK_THROWS_AS(strange_family(3, 3, 1), Error);
  CHECK_THROWS_AS(strange_family(4, 1, 1), Error);
  CHECK_THROWS_AS(strange_family(2, 1, 1), Error);
  CHECK(strange_family(5, 1, 3).degree() == 8);
  CHECK(strange_family(5, 1, 3).to_string() == "x^3*y^5 + z^8");
}

TEST_CASE("smoothness of known curves") {
  CHECK(is_smooth(curve("x^2 + 2*y^2 - z^2")));
  CHECK(is_smooth(curve("x^3 + y^3 + z^3")));
  CHECK(is_smooth(curve("x^4 + y^4 + z^4")));
  CHECK_FALSE(is_smooth(curve("y^2*z - x^3")));
  CHECK_FALSE(is_smooth(curve("y^2*z - x^3 - x^2*z")));
  CHECK_FALSE(is_smooth(curve("x*y")));
  // singular only at conjugate points (1 : +-i : 0)
  CHECK_FALSE(is_smooth(curve("x^4 + 2*x^2*y^2 + y^4 + x*z^3")));
  CHECK(is_smooth(curve("x^3 + y^3 + z^3", FieldSpec::prime(7))));
  CHECK_FALSE(is_smooth(strange_family(3, 1, 2)));
}

TEST_CASE("smoothness is consistent with enumeration over small fields") {
  Rng rng(41);
  std::uniform_int_distribution<int> deg(2, 4);
  int singular = 0;
  for (std::uint64_t p : {5ull, 7ull, 11ull}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (int i = 0; i < 150; ++i) {
      const PlaneCurve x = random_curve(f, deg(rng), rng);
      if (has_rational_singular_point(x)) {
        ++singular;
        CHECK_FALSE(is_smooth(x));
      }
    }
  }
  CHECK(singular > 0);
}

TEST_CASE("singularities moved by a projectivity are found") {
  Rng rng(42);
  const FieldSpec f = FieldSpec::prime(10007);
  const MultiPoly nodal = parse_poly("y^2*z - x^3 - x^2*z", primal_vars(), f);
  for (int i = 0; i < 20; ++i) {
    Mat3 a;
    for (auto& row : a)
      for (auto& c : row) c = sample_integer(f, rng, 1000);
    if (det3(a).is_zero()) continue;
    const PlaneCurve moved(substitute_linear(nodal, a));
    CHECK_FALSE(is_smooth(moved));
    CHECK(is_smooth(PlaneCurve(substitute_linear(parse_poly("x^3 + y^3 + z^3", primal_vars(), f), a))));
  }
}

TEST_CASE("circularity") {
  const MetricStructure m = MetricStructure::euclidean(kQ);
  CHECK(is_circular(curve("x^2 + y^2 - z^2"), m));
  CHECK(is_circular(curve("x^2 + y^2 - 2*x*z + 5*y*z"), m));
  CHECK_FALSE(is_circular(curve("x^2 + 2*y^2 - z^2"), m));
  CHECK_FALSE(is_circular(curve("x*y - z^2"), m));
  const MetricStructure skew(ProjectiveLine(make_vec3(kQ, 0, 0, 1)), parse_poly("x^2 + 2*y^2", primal_vars(), kQ));
  CHECK_FALSE(is_circular(curve("x^2 + y^2 - z^2"), skew));
  CHECK(is_circular(curve("x^2 + 2*y^2 - z^2"), skew));
}

TEST_CASE("sampled points are distinct regular points") {
  Rng rng(43);
  for (const char* s : {"x^2 + 2*y^2 - z^2", "x^3 + y^3 + z^3", "x^4 + y^4 + z^4"}) {
    const PlaneCurve x = curve(s, FieldSpec::prime(10007));
    const MetricStructure m = MetricStructure::euclidean(x.field());
    const PointSample sample = sample_regular_points(x, 30, rng, &m);
    CHECK(sample.points.size() == 30);
    std::set<std::string> seen;
    for (const auto& p : sample.points) {
      CHECK(x.contains(p));
      CHECK(x.is_regular(p));
      CHECK(is_general_point(x, p, m));
      seen.insert(p.normalized().to_string());
    }
    CHECK(seen.size() == sample.points.size());
  }
  const PlaneCurve fam = strange_family(3, 1, 2);
  const PointSample small = sample_regular_points(fam, 5, rng);
  for (const auto& p : small.points) CHECK(fam.is_regular(p));
}

TEST_CASE("tangent and normal lines pass through their points") {
  Rng rng(44);
  const PropertyOutcome r = check_incidence(rng, 1000);
  CHECK(r.cases == 1000);
  CHECK_MESSAGE(r.passed(), r.first_failure);
}

TEST_CASE("normal lines are equivariant under isometries") {
  Rng rng(45);
  const PropertyOutcome r = check_isometry_equivariance(rng, 1000);
  CHECK(r.cases == 1000);
  CHECK_MESSAGE(r.passed(), r.first_failure);
}
