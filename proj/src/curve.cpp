/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "normalgeom/curve.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ng {

namespace {

constexpr std::uint64_t kInternalSeed = 0x6e6f726d616cULL;

Vec3 random_vec(FieldSpec f, Rng& rng, long bound) {
  for (;;) {
    Vec3 v{sample_integer(f, rng, bound), sample_integer(f, rng, bound), sample_integer(f, rng, bound)};
    if (!is_zero_vec(v)) return v;
  }
}

BinaryForm restrict_form(const MultiPoly& p, const Vec3& a, const Vec3& b) {
  const int deg = p.is_zero() ? 0 : p.total_degree();
  return to_binary_form(restrict_to_line(p, a, b), 0, 1, deg);
}

PolyVec poly_cross(const PolyVec& a, const Vec3& b) {
  auto mul = [](const MultiPoly& p, const Scalar& s) { return s * p; };
  return {mul(a[1], b[2]) - mul(a[2], b[1]), mul(a[2], b[0]) - mul(a[0], b[2]), mul(a[0], b[1]) - mul(a[1], b[0])};
}

}  // namespace

PlaneCurve::PlaneCurve(MultiPoly f) : f_(std::move(f)) {
  if (f_.nvars() != 3 || f_.vars() != primal_vars())
    throw Error(Errc::invalid_argument, "a plane curve is a polynomial in x, y, z");
  if (f_.is_zero()) throw Error(Errc::invalid_argument, "the zero polynomial does not define a curve");
  if (!f_.is_homogeneous()) throw Error(Errc::invalid_argument, "curve equation " + f_.to_string() + " is not homogeneous");
  d_ = f_.total_degree();
  if (d_ < 2) throw Error(Errc::invalid_argument, "curve degree must be at least 2");
  for (std::size_t i = 0; i < 3; ++i) grad_[i] = f_.derivative(i);
  if (grad_[0].is_zero() && grad_[1].is_zero() && grad_[2].is_zero())
    throw Error(Errc::invalid_argument, "curve equation is a p-th power, not reduced");
  // a line meeting the curve in d distinct points certifies no repeated factor
  Rng rng(kInternalSeed);
  const FieldSpec fs = field();
  for (int attempt = 0; attempt < 80; ++attempt) {
    const Vec3 a = random_vec(fs, rng, 20), b = random_vec(fs, rng, 20);
    if (proportional(a, b)) continue;
    const BinaryForm r = restrict_form(f_, a, b);
    if (r.is_zero()) continue;
    if (distinct_root_count(r) == d_) return;
  }
  throw Error(Errc::invalid_argument, "curve equation " + f_.to_string() + " has a repeated factor");
}

PlaneCurve PlaneCurve::parse(std::string_view text, FieldSpec f) { return PlaneCurve(parse_poly(text, primal_vars(), f)); }

bool PlaneCurve::hypotheses_ok() const noexcept {
  return field().is_rational() || field().characteristic() > static_cast<std::uint64_t>(d_);
}

Scalar PlaneCurve::value_at(const Vec3& p) const { return f_.evaluate(p); }

Vec3 PlaneCurve::gradient_at(const Vec3& p) const {
  return {grad_[0].evaluate(p), grad_[1].evaluate(p), grad_[2].evaluate(p)};
}

bool PlaneCurve::contains(const ProjectivePoint& p) const { return value_at(p.coords()).is_zero(); }

bool PlaneCurve::is_regular(const ProjectivePoint& p) const {
  return contains(p) && !is_zero_vec(gradient_at(p.coords()));
}

PlaneCurve PlaneCurve::reduce_mod(FieldSpec target) const {
  MultiPoly r = f_.reduce_mod(target);
  if (r.total_degree() != d_ || !r.is_homogeneous())
    throw Error(Errc::degenerate, "reduction to " + target.name() + " changes the curve degree");
  return PlaneCurve(std::move(r));
}

void check_metric_compatible(const PlaneCurve& x, const MetricStructure& m) {
  if (!(x.field() == m.field())) throw Error(Errc::field_mismatch, "curve and metric over different fields");
  const auto b = m.h_inf().basis();
  if (restrict_to_line(x.equation(), b[0], b[1]).is_zero())
    throw Error(Errc::hypothesis, "the line at infinity is a component of " + x.to_string());
}

NormalMap normal_map(const PlaneCurve& x, const MetricStructure& m) {
  const Vec3& h = m.h_inf().coeffs();
  const Mat3& q = m.q_matrix();
  const PolyVec t = poly_cross(x.gradient(), h);  // tangent direction at infinity
  PolyVec qt;
  for (std::size_t i = 0; i < 3; ++i) {
    qt[i] = MultiPoly(x.field(), primal_vars());
    for (std::size_t j = 0; j < 3; ++j) qt[i] += q[i][j] * t[j];
  }
  // h x v = -(v x h)
  PolyVec n = poly_cross(qt, h);
  for (auto& c : n) c = -c;
  const FieldSpec f = x.field();
  const PolyVec p{MultiPoly::variable(f, primal_vars(), 0), MultiPoly::variable(f, primal_vars(), 1),
                  MultiPoly::variable(f, primal_vars(), 2)};
  PolyVec psi{p[1] * n[2] - p[2] * n[1], p[2] * n[0] - p[0] * n[2], p[0] * n[1] - p[1] * n[0]};
  return {n, psi};
}

ProjectiveLine tangent_line(const PlaneCurve& x, const ProjectivePoint& p) {
  if (!x.contains(p)) throw Error(Errc::invalid_argument, "point " + p.to_string() + " is not on the curve");
  Vec3 g = x.gradient_at(p.coords());
  if (is_zero_vec(g)) throw Error(Errc::degenerate, "point " + p.to_string() + " is singular");
  return ProjectiveLine(std::move(g));
}

ProjectivePoint normal_point(const PlaneCurve& x, const ProjectivePoint& p, const MetricStructure& m) {
  const ProjectiveLine t = tangent_line(x, p);
  if (t == m.h_inf()) throw Error(Errc::degenerate, "tangent at " + p.to_string() + " is the line at infinity");
  return m.perp(meet(t, m.h_inf()));
}

ProjectiveLine normal_line(const PlaneCurve& x, const ProjectivePoint& p, const MetricStructure& m) {
  const ProjectivePoint n = normal_point(x, p, m);
  if (n == p) throw Error(Errc::degenerate, "point " + p.to_string() + " coincides with its normal point");
  return join(p, n);
}

int contact_order(const PlaneCurve& x, const ProjectivePoint& p) {
  const ProjectiveLine t = tangent_line(x, p);
  // a second point of the tangent line
  const auto b = t.basis();
  const Vec3& q = proportional(b[0], p.coords()) ? b[1] : b[0];
  const MultiPoly r = restrict_to_line(x.equation(), p.coords(), q);
  if (r.is_zero()) return std::numeric_limits<int>::max();  // tangent line is a component
  unsigned low = ~0u;
  for (const auto& term : r.terms()) low = std::min(low, exponent_of(term.mono, 1));
  return static_cast<int>(low);
}

int multiplicity_at(const PlaneCurve& x, const ProjectivePoint& q) {
  if (!x.contains(q)) return 0;
  std::size_t chart = 0;
  while (q[chart].is_zero()) ++chart;
  const FieldSpec f = x.field();
  const Scalar inv = q[chart].inverse();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == chart) {
      images.push_back(MultiPoly::constant(f, primal_vars(), Scalar::one(f)));
    } else {
      images.push_back(MultiPoly::variable(f, primal_vars(), i) +
                       MultiPoly::constant(f, primal_vars(), q[i] * inv));
    }
  }
  const MultiPoly local = x.equation().compose(images);
  unsigned low = ~0u;
  for (const auto& t : local.terms()) low = std::min(low, monomial_degree(t.mono));
  return static_cast<int>(low);
}

std::optional<ProjectivePoint> strange_point(const PlaneCurve& x) {
  const FieldSpec f = x.field();
  const auto monos = monomials_of_degree(3, static_cast<unsigned>(x.degree() - 1));
  Matrix rows;
  for (Monomial mono : monos) {
    rows.push_back({x.gradient()[0].coefficient(mono), x.gradient()[1].coefficient(mono),
                    x.gradient()[2].coefficient(mono)});
  }
  const auto ker = kernel(std::move(rows), 3, f);
  if (ker.empty()) return std::nullopt;
  if (ker.size() > 1) throw Error(Errc::degenerate, "partials span less than two dimensions");
  return ProjectivePoint(Vec3{ker[0][0], ker[0][1], ker[0][2]});
}

std::vector<Vec3> all_points(FieldSpec f) {
  if (!f.is_prime()) throw Error(Errc::invalid_argument, "point enumeration needs a prime field");
  const std::uint64_t p = f.characteristic();
  std::vector<Vec3> out;
  const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) out.push_back({Scalar::from_residue(f, a), Scalar::from_residue(f, b), one});
  for (std::uint64_t a = 0; a < p; ++a) out.push_back({Scalar::from_residue(f, a), one, zero});
  out.push_back({one, zero, zero});
  return out;
}

Mat3 frame_with_center(const Vec3& c, Rng& rng) {
  const FieldSpec f = c[0].field();
  for (;;) {
    const Vec3 a = random_vec(f, rng, 5), b = random_vec(f, rng, 5);
    Mat3 t = from_columns(a, b, c);
    if (!det3(t).is_zero()) return t;
  }
}

BinaryForm projected_resultant(const MultiPoly& f, const MultiPoly& g, const Mat3& t) {
  const MultiPoly ft = substitute_linear(f, t), gt = substitute_linear(g, t);
  const int deg = f.total_degree() * g.total_degree();
  if (gt.degree_in(2) <= 0) {
    // constant in z: Res = g^deg_z(f)
    return to_binary_form(gt.pow(static_cast<unsigned>(ft.degree_in(2))), 0, 1, deg);
  }
  return to_binary_form(resultant(ft, gt, 2), 0, 1, deg);
}

std::vector<Vec3> projection_centers(const MultiPoly& f, int count, Rng& rng) {
  const FieldSpec fs = f.field();
  std::vector<Vec3> out;
  if (fs.is_prime() && fs.characteristic() <= 13) {
    auto pts = all_points(fs);
    std::shuffle(pts.begin(), pts.end(), rng);
    for (const auto& p : pts) {
      if (static_cast<int>(out.size()) >= count) break;
      if (!f.evaluate(p).is_zero()) out.push_back(p);
    }
    return out;
  }
  for (int tries = 0; tries < count * 100 && static_cast<int>(out.size()) < count; ++tries) {
    Vec3 c = random_vec(fs, rng, 7);
    if (f.evaluate(c).is_zero()) continue;
    if (std::any_of(out.begin(), out.end(), [&](const Vec3& o) { return proportional(o, c); })) continue;
    out.push_back(c);
  }
  return out;
}

int count_intersections(const MultiPoly& f, const MultiPoly& g, std::span<const MultiPoly> exclusions, Rng& rng,
                        int centers) {
  if (g.is_zero()) throw Error(Errc::degenerate, "intersection with the zero polynomial");
  const auto cs = projection_centers(f, centers, rng);
  if (cs.empty()) throw Error(Errc::degenerate, "no projection center off the curve");
  int best = -1;
  for (const auto& c : cs) {
    const Mat3 t = frame_with_center(c, rng);
    const BinaryForm rg = projected_resultant(f, g, t);
    if (rg.is_zero()) throw Error(Errc::degenerate, "polynomial " + g.to_string() + " vanishes on a component");
    BinaryForm acc = rg;
    for (const auto& e : exclusions) {
      if (e.is_zero()) continue;
      const BinaryForm re = projected_resultant(f, e, t);
      if (re.is_zero()) continue;
      acc = gcd(acc, re);
    }
    const int count = distinct_root_count(rg) - distinct_root_count(acc);
    best = std::max(best, count);
  }
  return best;
}

bool have_common_zero(std::span<const MultiPoly> polys, Rng& rng, int centers) {
  if (polys.empty() || polys[0].is_zero()) throw Error(Errc::invalid_argument, "first polynomial must be nonzero");
  if (polys[0].total_degree() == 0) return false;
  const auto cs = projection_centers(polys[0], centers, rng);
  for (const auto& c : cs) {
    const Mat3 t = frame_with_center(c, rng);
    std::optional<BinaryForm> acc;
    for (std::size_t i = 1; i < polys.size(); ++i) {
      if (polys[i].is_zero()) continue;
      if (polys[i].total_degree() == 0) return false;
      const BinaryForm r = projected_resultant(polys[0], polys[i], t);
      if (r.is_zero()) continue;
      acc = acc ? gcd(*acc, r) : r;
    }
    if (!acc) return true;  // every polynomial vanishes along a component
    if (distinct_root_count(*acc) == 0) return false;
  }
  return true;
}

bool is_smooth(const PlaneCurve& x) {
  const FieldSpec f = x.field();
  if (f.is_prime() && f.characteristic() <= 211) {
    for (const auto& p : all_points(f)) {
      if (x.value_at(p).is_zero() && is_zero_vec(x.gradient_at(p))) return false;
    }
  }
  Rng rng(kInternalSeed);
  std::vector<MultiPoly> polys{x.equation(), x.gradient()[0], x.gradient()[1], x.gradient()[2]};
  return !have_common_zero(polys, rng, 8);
}

bool is_circular(const PlaneCurve& x, const MetricStructure& m) {
  check_metric_compatible(x, m);
  const auto b = m.h_inf().basis();
  const BinaryForm a = restrict_form(x.equation(), b[0], b[1]);
  const BinaryForm q = restrict_form(m.q_form(), b[0], b[1]);
  return distinct_root_count(gcd(a, q)) > 0;
}

bool is_general_point(const PlaneCurve& x, const ProjectivePoint& p, const MetricStructure& m) {
  if (!x.is_regular(p)) return false;
  if (m.h_inf().contains(p)) return false;
  const ProjectiveLine t = tangent_line(x, p);
  if (t == m.h_inf()) return false;
  return !(m.perp(meet(t, m.h_inf())) == p);
}

PointSample sample_regular_points(const PlaneCurve& x, int count, Rng& rng, const MetricStructure* metric) {
  PointSample out;
  if (count <= 0) return out;
  const FieldSpec f = x.field();
  std::vector<ProjectivePoint> seen;
  const int budget = std::max(300, count * 80);
  auto known = [&](const Vec3& v) {
    return std::any_of(seen.begin(), seen.end(), [&](const ProjectivePoint& s) { return proportional(s.coords(), v); });
  };
  while (static_cast<int>(out.points.size()) < count && out.lines_scanned < budget) {
    ++out.lines_scanned;
    Vec3 a, b;
    const int mode = f.is_rational() ? out.lines_scanned % 3 : 2;
    if (mode == 0 && out.points.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pick(0, out.points.size() - 1);
      a = out.points[pick(rng)].coords();
      b = out.points[pick(rng)].coords();
    } else if (mode == 1 && !out.points.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, out.points.size() - 1);
      a = out.points[pick(rng)].coords();
      b = random_vec(f, rng, 6);
    } else {
      a = random_vec(f, rng, 6);
      b = random_vec(f, rng, 6);
    }
    if (proportional(a, b)) continue;
    const BinaryForm r = restrict_form(x.equation(), a, b);
    if (r.is_zero()) continue;
    std::vector<Vec3> candidates;
    if (r.infinity_multiplicity() > 0) candidates.push_back(a);
    if (r.dehom.degree() > 0) {
      for (const auto& s : field_roots(r.dehom)) {
        candidates.push_back({s * a[0] + b[0], s * a[1] + b[1], s * a[2] + b[2]});
      }
    }
    for (const auto& c : candidates) {
      if (known(c)) continue;
      ProjectivePoint p(c);
      seen.push_back(p);
      if (!x.is_regular(p)) continue;
      if (metric && !is_general_point(x, p, *metric)) {
        ++out.rejected;
        continue;
      }
      out.points.push_back(p);
      if (static_cast<int>(out.points.size()) >= count) break;
    }
  }
  return out;
}

PlaneCurve strange_family(std::uint64_t p, int e, int t) {
  if (e < 1 || t < 1) throw Error(Errc::invalid_argument, "family exponents must be positive");
  const FieldSpec f = FieldSpec::prime(p);
  if (std::gcd(p, static_cast<std::uint64_t>(e)) != 1 || std::gcd(p, static_cast<std::uint64_t>(t)) != 1)
    throw Error(Errc::invalid_argument, "family needs gcd(p, e) = gcd(p, t) = 1");
  if (p * static_cast<std::uint64_t>(e) + static_cast<std::uint64_t>(t) > 0xFFFF)
    throw Error(Errc::invalid_argument, "family degree exceeds the supported exponent range");
  const unsigned pe = static_cast<unsigned>(p) * static_cast<unsigned>(e);
  const Monomial m1 = monomial_of(0, static_cast<unsigned>(t)) + monomial_of(1, pe);
  const Monomial m2 = monomial_of(2, pe + static_cast<unsigned>(t));
  return PlaneCurve(MultiPoly(f, primal_vars(), {{m1, Scalar::one(f)}, {m2, Scalar::one(f)}}));
}

}  // namespace ng
