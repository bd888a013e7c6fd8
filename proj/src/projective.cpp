/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "normalgeom/projective.hpp"

namespace ng {

namespace {

void check_nonzero(const Vec3& c, const char* what) {
  if (is_zero_vec(c)) throw Error(Errc::invalid_argument, std::string(what) + " with all coordinates zero");
  if (!(c[0].field() == c[1].field()) || !(c[1].field() == c[2].field()))
    throw Error(Errc::field_mismatch, std::string(what) + " with coordinates in different fields");
}

// Primitive integer triple with positive first nonzero entry over Q; first
// nonzero entry 1 over F_p.
Vec3 normalize_triple(const Vec3& c) {
  const FieldSpec f = c[0].field();
  Vec3 r = c;
  std::size_t lead = 0;
  while (c[lead].is_zero()) ++lead;
  if (f.is_prime()) {
    const Scalar inv = c[lead].inverse();
    for (auto& v : r) v *= inv;
    return r;
  }
  mpz_class l = 1, g = 0;
  for (const auto& v : c) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.rational().get_den_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.rational().get_num_mpz_t());
  }
  mpq_class scale(l, g);
  if (sgn(c[lead].rational()) < 0) scale = -scale;
  const Scalar s = Scalar::from_mpq(f, scale);
  for (auto& v : r) v *= s;
  return r;
}

std::string triple_string(const Vec3& c) {
  return "(" + c[0].to_string() + ":" + c[1].to_string() + ":" + c[2].to_string() + ")";
}

}  // namespace

ProjectivePoint::ProjectivePoint(Vec3 c, Space s) : c_(std::move(c)), space_(s) { check_nonzero(c_, "point"); }

ProjectivePoint ProjectivePoint::normalized() const { return ProjectivePoint(normalize_triple(c_), space_); }

std::string ProjectivePoint::to_string() const { return triple_string(normalize_triple(c_)); }

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
  return a.space_ == b.space_ && a.field() == b.field() && proportional(a.c_, b.c_);
}

ProjectiveLine::ProjectiveLine(Vec3 c, Space s) : c_(std::move(c)), space_(s) { check_nonzero(c_, "line"); }

bool ProjectiveLine::contains(const ProjectivePoint& p) const {
  if (p.space() != space_) throw Error(Errc::invalid_argument, "incidence between different planes");
  return dot(c_, p.coords()).is_zero();
}

ProjectivePoint ProjectiveLine::dual_point() const {
  return ProjectivePoint(c_, space_ == Space::primal ? Space::dual : Space::primal);
}

std::array<Vec3, 2> ProjectiveLine::basis() const {
  const FieldSpec f = field();
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  if (!c_[0].is_zero()) return {Vec3{-c_[1], c_[0], zero}, Vec3{-c_[2], zero, c_[0]}};
  if (!c_[1].is_zero()) return {Vec3{one, zero, zero}, Vec3{zero, -c_[2], c_[1]}};
  return {Vec3{one, zero, zero}, Vec3{zero, one, zero}};
}

ProjectiveLine ProjectiveLine::normalized() const { return ProjectiveLine(normalize_triple(c_), space_); }

std::string ProjectiveLine::to_string() const { return triple_string(normalize_triple(c_)); }

bool operator==(const ProjectiveLine& a, const ProjectiveLine& b) {
  return a.space_ == b.space_ && a.field() == b.field() && proportional(a.c_, b.c_);
}

ProjectiveLine join(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.space() != q.space()) throw Error(Errc::invalid_argument, "join of points in different planes");
  Vec3 c = cross(p.coords(), q.coords());
  if (is_zero_vec(c)) throw Error(Errc::degenerate, "join of coincident points " + p.to_string());
  return ProjectiveLine(std::move(c), p.space());
}

ProjectivePoint meet(const ProjectiveLine& l, const ProjectiveLine& m) {
  if (l.space() != m.space()) throw Error(Errc::invalid_argument, "meet of lines in different planes");
  Vec3 c = cross(l.coeffs(), m.coeffs());
  if (is_zero_vec(c)) throw Error(Errc::degenerate, "meet of coincident lines " + l.to_string());
  return ProjectivePoint(std::move(c), l.space());
}

ProjectiveLine line_from_dual(const ProjectivePoint& u) {
  return ProjectiveLine(u.coords(), u.space() == Space::dual ? Space::primal : Space::dual);
}

MetricStructure::MetricStructure(ProjectiveLine h_inf, const MultiPoly& q) : h_(std::move(h_inf)), q_poly_(q) {
  const FieldSpec f = h_.field();
  if (f.is_prime() && f.characteristic() == 2) throw Error(Errc::hypothesis, "characteristic 2");
  if (!(q.field() == f)) throw Error(Errc::field_mismatch, "metric line and form over different fields");
  if (q.nvars() != 3 || (!q.is_zero() && (!q.is_homogeneous() || q.total_degree() != 2)))
    throw Error(Errc::invalid_argument, "metric form must be a ternary quadratic form");
  const Scalar half = Scalar(f, 2).inverse();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Monomial m = monomial_of(i, 1) + monomial_of(j, 1);
      Scalar c = q.coefficient(m);
      q_[i][j] = i == j ? c : c * half;
    }
  }
  const auto b = h_.basis();
  const Scalar g11 = bilinear(b[0], b[0]), g12 = bilinear(b[0], b[1]), g22 = bilinear(b[1], b[1]);
  if ((g11 * g22 - g12 * g12).is_zero())
    throw Error(Errc::invalid_argument, "quadratic form " + q.to_string() + " is degenerate on the line at infinity");
}

MetricStructure MetricStructure::euclidean(FieldSpec f) {
  return MetricStructure(ProjectiveLine(make_vec3(f, 0, 0, 1)), parse_poly("x^2+y^2", primal_vars(), f));
}

Scalar MetricStructure::bilinear(const Vec3& a, const Vec3& b) const { return dot(a, mat_vec(q_, b)); }

Vec3 MetricStructure::perp_vector(const Vec3& v) const { return cross(h_.coeffs(), mat_vec(q_, v)); }

ProjectivePoint MetricStructure::perp(const ProjectivePoint& a) const {
  if (a.space() != Space::primal || !h_.contains(a))
    throw Error(Errc::invalid_argument, "perp of a point " + a.to_string() + " not on the line at infinity");
  if (broken_) {
    const auto e = h_.basis();
    // solve a = alpha e0 + beta e1 on a pair of coordinates with nonzero minor
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        const Scalar det = e[0][i] * e[1][j] - e[0][j] * e[1][i];
        if (det.is_zero()) continue;
        const Scalar alpha = (a[i] * e[1][j] - a[j] * e[1][i]) / det;
        const Scalar beta = (e[0][i] * a[j] - e[0][j] * a[i]) / det;
        Vec3 r;
        for (std::size_t k = 0; k < 3; ++k) r[k] = beta * e[0][k] + (alpha + beta) * e[1][k];
        return ProjectivePoint(r);
      }
    }
  }
  return ProjectivePoint(perp_vector(a.coords()));
}

MetricStructure MetricStructure::reduce_mod(FieldSpec target) const {
  Vec3 h;
  for (std::size_t i = 0; i < 3; ++i) h[i] = Scalar::from_mpq(target, h_[i].rational());
  MetricStructure r(ProjectiveLine(h), q_poly_.reduce_mod(target));
  r.broken_ = broken_;
  return r;
}

MetricStructure MetricStructure::with_broken_perp() const {
  MetricStructure r = *this;
  r.broken_ = true;
  return r;
}

Projectivity::Projectivity(const Mat3& m) : a(m), a_inv(inverse3(m)) {}

MultiPoly substitute_linear(const MultiPoly& f, const Mat3& m) {
  const FieldSpec fs = f.field();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<MultiPoly::Term> t;
    for (std::size_t j = 0; j < 3; ++j) {
      if (!m[i][j].is_zero()) t.push_back({monomial_of(j, 1), m[i][j]});
    }
    images.emplace_back(fs, f.vars(), std::move(t));
  }
  return f.compose(images);
}

MultiPoly Projectivity::push_forward(const MultiPoly& f) const { return substitute_linear(f, a_inv); }
MultiPoly Projectivity::pull_back(const MultiPoly& f) const { return substitute_linear(f, a); }

Projectivity random_isometry(const MetricStructure& m, Rng& rng) {
  const FieldSpec f = m.field();
  const auto e = m.h_inf().basis();
  // a point off h_inf
  Vec3 c = make_vec3(f, 0, 0, 1);
  for (std::size_t i = 0; i < 3; ++i) {
    c = make_vec3(f, i == 0, i == 1, i == 2);
    if (!dot(m.h_inf().coeffs(), c).is_zero()) break;
  }
  const Mat3 t = from_columns(e[0], e[1], c);
  const Scalar g11 = m.bilinear(e[0], e[0]), g12 = m.bilinear(e[0], e[1]), g22 = m.bilinear(e[1], e[1]);
  const Scalar det = g11 * g22 - g12 * g12;
  // J = G^{-1} Omega is orthogonal-similar to the identity; R = alpha I + beta J
  const Scalar inv = det.inverse();
  const Scalar j11 = g12 * inv, j12 = g22 * inv, j21 = -g11 * inv, j22 = -g12 * inv;
  for (;;) {
    const Scalar alpha = sample_integer(f, rng, 9), beta = sample_integer(f, rng, 9);
    const Scalar r11 = alpha + beta * j11, r12 = beta * j12, r21 = beta * j21, r22 = alpha + beta * j22;
    if ((r11 * r22 - r12 * r21).is_zero()) continue;
    const Scalar t1 = sample_integer(f, rng, 9), t2 = sample_integer(f, rng, 9);
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    const Mat3 local = {Vec3{r11, r12, t1}, Vec3{r21, r22, t2}, Vec3{zero, zero, one}};
    return Projectivity(mat_mul(mat_mul(t, local), inverse3(t)));
  }
}

}  // namespace ng
