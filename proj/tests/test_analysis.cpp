/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <sstream>

#include "normalgeom/analysis.hpp"
#include "normalgeom/error.hpp"

using namespace ng;
using namespace ng::app;

namespace {

RunConfig rationals() { return RunConfig{}; }

RunConfig over(std::uint64_t p) {
  RunConfig c;
  c.characteristic = p;
  return c;
}

Errc error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

}  // namespace

TEST_CASE("ellipse report") {
  const json r = run_analyze("x^2 + 2*y^2 - z^2", rationals());
  CHECK(r["schema"] == 1);
  CHECK(r["command"] == "analyze");
  CHECK(r["degree"] == 2);
  CHECK(r["smooth"] == true);
  CHECK(r["circular"] == false);
  CHECK(r["strange_point"].is_null());
  CHECK(r["class"]["value"] == 2);
  CHECK(r["normal_class"]["value"] == 4);
  CHECK(r["separable_degree"]["fiber_e"] == 1);
  CHECK(r["normal_curve"]["degree"] == 4);
  CHECK(r["bottlenecks"]["count_closure"] == 2);
  CHECK(r.contains("timing"));
}

TEST_CASE("circle and strange family reports") {
  const json c = run_analyze("x^2 + y^2 - z^2", rationals());
  CHECK(c["circular"] == true);
  CHECK(c["separable_degree"]["fiber_e"] == 2);
  CHECK(c["normal_curve"]["equation"] == "u2");
  CHECK(c["bottlenecks"]["finite"] == false);

  const json s = run_family(3, 1, 2, rationals());
  CHECK(s["field"] == "F_3");
  CHECK(s["strange_point"] == json::array({"0", "1", "0"}));
  CHECK(s["separable_degree"]["fiber_e"] == 2);
  CHECK(s["normal_curve"]["equation"] == "u0");
}

TEST_CASE("reports are deterministic for a fixed seed") {
  RunConfig cfg;
  cfg.seed = 17;
  const std::string a = strip_timing(run_analyze("x^3 + y^3 + z^3", cfg)).dump();
  const std::string b = strip_timing(run_analyze("x^3 + y^3 + z^3", cfg)).dump();
  CHECK(a == b);
  CHECK(a.find("timing") == std::string::npos);
}

TEST_CASE("printed polynomials parse back to themselves") {
  const FieldSpec q = FieldSpec::rationals();
  const json r = run_analyze("x^2 + 2*y^2 - z^2", rationals());
  const std::string eq = r["curve"];
  CHECK(parse_poly(eq, primal_vars(), q).to_string() == eq);
  const std::string n = r["normal_curve"]["equation"];
  CHECK(parse_poly(n, dual_vars(), q).to_string() == n);
  for (const auto& f : r["normal_curve"]["stripped_factors"]) {
    const std::string s = f["factor"];
    CHECK(parse_poly(s, dual_vars(), q).to_string() == s);
  }
  const json d = run_dual_curve("x^2 + 2*y^2 - z^2", rationals());
  const std::string de = d["dual_curve"]["equation"];
  CHECK(parse_poly(de, dual_vars(), q).to_string() == de);
}

TEST_CASE("fiber report") {
  const json r = run_fiber("x^2 + 2*y^2 - z^2", "12,-3,-2", rationals());
  CHECK(r["fiber"]["regular_points"] == 1);
  CHECK(r["fiber"]["line"] == json::array({"12", "-3", "-2"}));
  CHECK(error_of([] { (void)run_fiber("x^2 + 2*y^2 - z^2", "1,2", rationals()); }) == Errc::parse);
  CHECK(error_of([] { (void)run_fiber("x^2 + 2*y^2 - z^2", "0,0,0", rationals()); }) != Errc::internal);
}

TEST_CASE("comparison reports") {
  const json a = run_compare("x^2 + 2*y^2 - z^2", "x^2 + 3*y^2 - z^2", rationals());
  CHECK(a["equal"] == false);
  CHECK(a["pathology"] == false);
  CHECK(a["evidence"].contains("witness_line"));

  const json b = run_compare("x^2*y^3 + z^5", "x^4*y^3 + z^7", over(3));
  CHECK(b["equal"] == true);
  CHECK(b["curves_identical"] == false);
  CHECK(b["pathology"] == true);
  CHECK(b["bottlenecks"]["finite"] == false);

  const json c = run_compare("x^2 + 2*y^2 - z^2", "2*x^2 + 4*y^2 - 2*z^2", rationals());
  CHECK(c["equal"] == true);
  CHECK(c["curves_identical"] == true);
  CHECK(c["pathology"] == false);
}

TEST_CASE("sample table") {
  const std::string csv = emit_samples("x^2 + y^2 - z^2", over(101));
  const auto rows = split(csv, '\n');
  REQUIRE(rows.size() >= 2);
  CHECK(rows[0] == "px,py,pz,tx,ty,tz,nx,ny,nz,fiber");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i], ',');
    REQUIRE(cells.size() == 10);
    CHECK(cells[8] == "0");  // every normal passes through the centre (0:0:1)
    CHECK(cells[9] == "2");
    const long x = std::stol(cells[0]), y = std::stol(cells[1]), z = std::stol(cells[2]);
    CHECK((x * x + y * y - z * z) % 101 == 0);
  }
  CHECK(error_of([] { (void)emit_samples("x^2 + y^2 - z^2", over(10007)); }) == Errc::invalid_argument);
  const auto q_rows = split(emit_samples("x^2 + y^2 - z^2", rationals()), '\n');
  CHECK(q_rows.size() >= 2);
}

TEST_CASE("configuration errors") {
  RunConfig bad;
  bad.samples = 0;
  CHECK(error_of([&] { (void)config_field(bad); }) == Errc::invalid_argument);
  CHECK(error_of([] { (void)run_analyze("x^2 + y^2 - z^2", over(2)); }) == Errc::hypothesis);
  CHECK(error_of([] { (void)run_analyze("x^2 + y^2 - z^2", over(9)); }) == Errc::invalid_argument);
  CHECK(error_of([] { (void)run_analyze("x^2 + y", rationals()); }) == Errc::invalid_argument);
  CHECK(error_of([] { (void)run_analyze("x^^2", rationals()); }) == Errc::parse);
  RunConfig metric;
  metric.metric_q = "x^2";
  CHECK(error_of([&] { (void)config_metric(metric, FieldSpec::rationals()); }) == Errc::invalid_argument);
  CHECK(parse_line("1, -2, 3", FieldSpec::rationals()) == ProjectiveLine(make_vec3(FieldSpec::rationals(), 1, -2, 3)));
}

TEST_CASE("error objects carry a code and a message") {
  const json e = error_json(Error(Errc::budget, "out of time"));
  CHECK(e["code"] == "budget");
  CHECK(e["message"] == "out of time");
  CHECK(error_json(std::runtime_error("boom"))["code"] == "internal");
}

TEST_CASE("a budget stops the quartic normal curve") {
  RunConfig cfg;
  cfg.budget = 0.5;
  const json r = run_analyze("x^4 + y^4 - z^4", cfg);
  CHECK(r["class"]["value"] == 12);
  CHECK(r["normal_class"]["value"] == 16);
  CHECK(r["normal_curve"].contains("error"));
}

TEST_CASE("text rendering flattens paths") {
  const json j = {{"a", {{"b", 1}, {"c", json::array({"x", "y"})}}}, {"d", "e"}};
  const std::string t = render(j, "text");
  CHECK(t.find("a.b: 1") != std::string::npos);
  CHECK(t.find("d: e") != std::string::npos);
  CHECK(render(j, "json").find("\"d\": \"e\"") != std::string::npos);
}
