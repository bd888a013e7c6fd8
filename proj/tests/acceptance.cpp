/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// Acceptance run: one PASS/FAIL line per criterion. A criterion passes when
// the library check holds, finishes inside its time limit, and the derived
// values agree with the reference computations below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "normalgeom/analysis.hpp"
#include "oracle.hpp"

namespace {

using oracle::u64;
using oracle::Vec;
using namespace ng;

struct Check {
  bool ok = true;
  std::string note;
  void expect(bool cond, const std::string& what) {
    if (!note.empty()) note += "; ";
    note += what + (cond ? "" : " [mismatch]");
    ok = ok && cond;
  }
};

constexpr u64 kBig = 1000003;

MultiPoly over(const char* text, u64 p) { return parse_poly(text, primal_vars(), FieldSpec::prime(p)); }

MultiPoly polar(const MultiPoly& f, const Vec& o) {
  const FieldSpec k = f.field();
  MultiPoly out(k, primal_vars());
  for (std::size_t i = 0; i < 3; ++i)
    out += MultiPoly::constant(k, primal_vars(), Scalar::from_residue(k, o[i])) * f.derivative(i);
  return out;
}

// det [o; (x, y, z); (F_x, F_y, 0)]
MultiPoly normal_polar(const MultiPoly& f, const Vec& o) {
  const FieldSpec k = f.field();
  auto c = [&](u64 v) { return MultiPoly::constant(k, primal_vars(), Scalar::from_residue(k, v)); };
  const MultiPoly x = MultiPoly::variable(k, primal_vars(), 0), y = MultiPoly::variable(k, primal_vars(), 1),
                  z = MultiPoly::variable(k, primal_vars(), 2);
  const MultiPoly fx = f.derivative(0), fy = f.derivative(1);
  return c(o[1]) * z * fx - c(o[0]) * z * fy + c(o[2]) * (x * fy - y * fx);
}

// class and normal class by resultant counting at a random centre
std::pair<int, int> counts(const MultiPoly& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> pick(0, kBig - 1);
  const Vec o{pick(rng), pick(rng), pick(rng)};
  return {oracle::intersection_count(f, polar(f, o), kBig, rng), oracle::intersection_count(f, normal_polar(f, o), kBig, rng)};
}

// lines normal at two or more F_p-points, other than the line at infinity
std::set<Vec> double_normals(const MultiPoly& f, u64 p) {
  std::map<Vec, int> feet;
  for (const Vec& v : oracle::points_on(f, p)) {
    const Vec l = oracle::euclidean_normal(f, v, p);
    if (l == Vec{0, 0, 0} || l == Vec{0, 0, 1}) continue;
    ++feet[l];
  }
  std::set<Vec> out;
  for (const auto& [l, n] : feet)
    if (n >= 2) out.insert(l);
  return out;
}

// affine points with z = 1 found by scanning y for random x
std::vector<Vec> some_points(const MultiPoly& f, u64 p, int count, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> pick(0, p - 1);
  std::vector<Vec> out;
  while (static_cast<int>(out.size()) < count) {
    const u64 x = pick(rng);
    for (u64 y = 0; y < p && static_cast<int>(out.size()) < count; ++y) {
      const Vec v{x, y, 1};
      if (oracle::eval3(f, v, p) != 0) continue;
      if (oracle::partial3(f, v, 0, p) == 0 && oracle::partial3(f, v, 1, p) == 0) continue;
      out.push_back(v);
    }
  }
  return out;
}

std::string str(const std::set<Vec>& s) {
  std::ostringstream o;
  o << "{";
  bool first = true;
  for (const Vec& v : s) {
    o << (first ? "" : ", ") << "(" << v[0] << ":" << v[1] << ":" << v[2] << ")";
    first = false;
  }
  o << "}";
  return o.str();
}

Check ellipse_reference() {
  Check c;
  std::mt19937_64 rng(3);
  const auto [cls, ncls] = counts(over("x^2 + 2*y^2 - z^2", kBig), rng);
  c.expect(cls == 2 && ncls == 4, "resultant counts " + std::to_string(cls) + "/" + std::to_string(ncls));
  const std::set<Vec> axes{{0, 1, 0}, {1, 0, 0}};
  for (u64 p : {103ull, 113ull}) {
    const auto b = double_normals(over("x^2 + 2*y^2 - z^2", p), p);
    c.expect(b == axes, "double normals over F_" + std::to_string(p) + " " + str(b));
  }
  const MultiPoly f = over("x^2 + 2*y^2 - z^2", kBig);
  const int fx = oracle::feet_count(f, {1, 0, 0}, kBig, rng), fy = oracle::feet_count(f, {0, 1, 0}, kBig, rng);
  c.expect(fx == 2 && fy == 2, "feet on x=0, y=0: " + std::to_string(fx) + ", " + std::to_string(fy));
  int single = 0;
  const auto pts = some_points(f, kBig, 20, rng);
  for (const Vec& v : pts) single += oracle::feet_count(f, oracle::euclidean_normal(f, v, kBig), kBig, rng) == 1;
  c.expect(single == 20, "fiber 1 at " + std::to_string(single) + "/20 sampled normals");
  return c;
}

Check circle_reference() {
  Check c;
  const u64 p = 103;
  const MultiPoly f = over("x^2 + y^2 - z^2", p);
  std::map<Vec, int> feet;
  bool through_centre = true;
  for (const Vec& v : oracle::points_on(f, p)) {
    const Vec l = oracle::euclidean_normal(f, v, p);
    through_centre = through_centre && l[2] == 0;
    ++feet[l];
  }
  bool antipodal = !feet.empty();
  for (const auto& [l, n] : feet) antipodal = antipodal && n == 2;
  c.expect(through_centre, "all normals over F_103 pass through (0:0:1)");
  c.expect(antipodal, "each normal over F_103 has two feet");
  return c;
}

Check cubic_reference() {
  Check c;
  std::mt19937_64 rng(5);
  const MultiPoly f = over("x^3 + y^3 + z^3", kBig);
  const auto [cls, ncls] = counts(f, rng);
  c.expect(cls == 6 && ncls == 9, "resultant counts " + std::to_string(cls) + "/" + std::to_string(ncls));
  int single = 0;
  for (const Vec& v : some_points(f, kBig, 20, rng))
    single += oracle::feet_count(f, oracle::euclidean_normal(f, v, kBig), kBig, rng) == 1;
  c.expect(single >= 18, "fiber 1 at " + std::to_string(single) + "/20 sampled normals");
  // degree of the normal curve is the normal class over the general fiber size
  c.expect(ncls == 9, "normal curve degree " + std::to_string(ncls) + "/1");
  return c;
}

Check quartic_reference() {
  Check c;
  std::mt19937_64 rng(7);
  const auto [cls, ncls] = counts(over("x^4 + y^4 - z^4", kBig), rng);
  c.expect(cls == 12 && ncls == 16, "resultant counts " + std::to_string(cls) + "/" + std::to_string(ncls));
  for (u64 p : {1009ull, 4001ull, 9001ull}) {
    const MultiPoly f = over("x^4 + y^4 - z^4", p);
    int four = 0;
    for (const Vec& v : some_points(f, p, 7, rng)) {
      const Vec l = oracle::euclidean_normal(f, v, p);
      const oracle::LineParam lp = oracle::parametrize(l, f, p, rng);
      const oracle::Poly r = oracle::restrict_to(lp, 4, p, [&](const Vec& w) { return oracle::eval3(f, w, p); });
      four += oracle::distinct_roots(r, p) == 4;
    }
    c.expect(four == 7, "F_" + std::to_string(p) + ": " + std::to_string(four) + "/7 normals meet X in 4 points");
  }
  return c;
}

Check two_ellipses_reference() {
  Check c;
  std::mt19937_64 rng(11);
  const u64 p = 10007;
  const MultiPoly x = over("x^2 + 2*y^2 - z^2", p), y = over("x^2 + 3*y^2 - z^2", p);
  int missing = 0, own = 0;
  const auto pts = some_points(x, p, 20, rng);
  for (const Vec& v : pts) {
    const Vec l = oracle::euclidean_normal(x, v, p);
    own += oracle::feet_count(x, l, p, rng) >= 1;
    missing += oracle::feet_count(y, l, p, rng) == 0;
  }
  c.expect(own == 20, "sampled normals of the first ellipse are normal to it");
  c.expect(missing > 0, std::to_string(missing) + "/20 of them are not normal to the second");
  return c;
}

const std::map<std::string, std::function<Check()>>& references() {
  static const std::map<std::string, std::function<Check()>> refs{{"AC3", ellipse_reference},
                                                                  {"AC4", circle_reference},
                                                                  {"AC5", cubic_reference},
                                                                  {"AC6", quartic_reference},
                                                                  {"AC8", two_ellipses_reference}};
  return refs;
}

void report(bool pass, const std::string& id, const std::string& title, double seconds, double limit,
            const std::string& note) {
  std::printf("%s %-4s %s (%.2fs, limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), seconds, limit,
              note.empty() ? "" : ": ", note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const app::RunConfig cfg;
  bool all = true;
  double limit_total = 0;
  for (const auto& criterion : app::criteria()) {
    limit_total += criterion.limit_seconds;
    const app::CriterionResult r = app::run_criterion(criterion, cfg);
    const bool in_time = r.seconds < criterion.limit_seconds;
    Check ref;
    if (const auto it = references().find(criterion.id); it != references().end()) ref = it->second();
    std::string note = ref.note;
    if (!r.pass) note = "library check failed " + r.details.dump() + (note.empty() ? "" : "; " + note);
    if (!in_time) note = "over time limit" + (note.empty() ? "" : "; " + note);
    const bool pass = r.pass && in_time && ref.ok;
    all = all && pass;
    report(pass, criterion.id, criterion.title, r.seconds, criterion.limit_seconds, note);
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::string first = app::strip_timing(app::run_verify(cfg)).dump();
  const std::string second = app::strip_timing(app::run_verify(cfg)).dump();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool same = first == second;
  const bool in_time = seconds < 2 * limit_total;
  all = all && same && in_time;
  report(same && in_time, "AC10", "determinism: two verify runs with one seed", seconds, 2 * limit_total,
         same ? std::to_string(first.size()) + " identical bytes" : "reports differ");

  std::printf("%s\n", all ? "ALL PASS" : "SOME FAILED");
  return all ? 0 : 1;
}
