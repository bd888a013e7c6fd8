/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "normalgeom/bottleneck.hpp"

#include <algorithm>

namespace ng {

namespace {

const std::vector<std::string>& ring_vars() {
  static const std::vector<std::string> v{"a1", "a2", "l"};
  return v;
}

std::optional<UPoly> inverse_mod(const UPoly& a, const UPoly& m) {
  // extended Euclid: track s with s * a = r (mod m)
  UPoly r0 = m, r1 = rem(a, m);
  UPoly s0(m.field()), s1 = UPoly::constant(Scalar::one(m.field()));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return rem(r0.lead().inverse() * s0, m);
}

UPoly eval_mod(const MultiPoly& p, const std::array<UPoly, 3>& vals, const UPoly& m) {
  const FieldSpec f = p.field();
  UPoly acc(f);
  for (const auto& t : p.terms()) {
    UPoly term = UPoly::constant(t.coeff);
    for (std::size_t i = 0; i < 3; ++i) {
      for (unsigned e = exponent_of(t.mono, i); e > 0; --e) term = rem(term * vals[i], m);
    }
    acc += term;
  }
  return rem(acc, m);
}

struct Chart {
  Mat3 t;           // local -> original points
  MultiPoly f, g;   // local equations
  NormalMap nf, ng;
};

MultiPoly in_ring(const MultiPoly& p, const std::array<MultiPoly, 3>& images) { return p.compose(images); }

UPoly res_a2(const MultiPoly& f, const MultiPoly& x) {
  if (x.is_zero()) return UPoly(f.field());
  return to_upoly(resultant(f, x, 1), 0);
}

// Removes from the squarefree m the roots it shares with u (zero u removes all).
UPoly remove_roots(const UPoly& m, const UPoly& u) {
  const UPoly g = gcd(m, u);
  if (g.is_zero() || g.degree() <= 0) return m;
  return divmod(m, g).first.monic();
}

UPoly common_roots(const MultiPoly& f, const MultiPoly& p, const MultiPoly& q) {
  return gcd(res_a2(f, p), res_a2(f, q));
}

}  // namespace

BottleneckReport bottlenecks(const PlaneCurve& x, const PlaneCurve* y, const MetricStructure& m, Rng& rng,
                             const Deadline& deadline) {
  check_metric_compatible(x, m);
  if (y) {
    if (!(y->field() == x.field())) throw Error(Errc::field_mismatch, "curves over different fields");
    check_metric_compatible(*y, m);
  }
  const PlaneCurve& other = y ? *y : x;
  const FieldSpec fs = x.field();
  BottleneckReport rep;
  rep.kind = y ? BottleneckReport::Kind::pair : BottleneckReport::Kind::single;

  // chart sending z = 0 to h_inf
  const auto e = m.h_inf().basis();
  Vec3 c = make_vec3(fs, 0, 0, 1);
  for (std::size_t i = 0; i < 3; ++i) {
    c = make_vec3(fs, i == 0, i == 1, i == 2);
    if (!dot(m.h_inf().coeffs(), c).is_zero()) break;
  }
  const Mat3 base = from_columns(e[0], e[1], c);
  const MetricStructure local_metric(ProjectiveLine(make_vec3(fs, 0, 0, 1)), substitute_linear(m.q_form(), base));

  const int dmax = std::max(x.degree(), other.degree());
  const MultiPoly one3 = MultiPoly::constant(fs, ring_vars(), Scalar::one(fs));
  const MultiPoly a1 = MultiPoly::variable(fs, ring_vars(), 0), a2 = MultiPoly::variable(fs, ring_vars(), 1),
                  lam = MultiPoly::variable(fs, ring_vars(), 2);

  bool finite = true;
  bool solved = false;
  for (int attempt = 0; attempt < 3 && !solved; ++attempt) {
    deadline.check("bottleneck elimination");
    rep.attempts = attempt + 1;
    Mat3 t = base;
    if (attempt > 0) t = mat_mul(base, random_isometry(local_metric, rng).a);
    const PlaneCurve fx(substitute_linear(x.equation(), t));
    const PlaneCurve gy = y ? PlaneCurve(substitute_linear(y->equation(), t)) : fx;
    const MetricStructure lm(ProjectiveLine(make_vec3(fs, 0, 0, 1)), substitute_linear(m.q_form(), t));
    const NormalMap nf = normal_map(fx, lm), ngm = normal_map(gy, lm);

    const std::array<MultiPoly, 3> at_a{a1, a2, one3};
    const MultiPoly fa = in_ring(fx.equation(), at_a);
    const MultiPoly v1 = in_ring(nf.n[0], at_a), v2 = in_ring(nf.n[1], at_a);
    const std::array<MultiPoly, 3> at_b{a1 + lam * v1, a2 + lam * v2, one3};
    const MultiPoly e2 = in_ring(gy.equation(), at_b);
    const MultiPoly e3 = v1 * in_ring(ngm.n[1], at_b) - v2 * in_ring(ngm.n[0], at_b);
    if (e3.is_zero()) {
      finite = false;
      rep.notes.push_back("normal directions are parallel identically");
      break;
    }
    if (dmax > 3) {
      rep.decided = false;
      rep.notes.push_back("elimination limited to degree <= 3");
      break;
    }
    MultiPoly e2p = e2, e3p = e3;
    if (!y) {
      e2p = divide_exact(e2 - fa, lam);
      e3p = divide_exact(e3, lam);
    }
    if (e2p.is_zero() || e3p.is_zero()) {
      finite = false;
      break;
    }
    if (e2p.degree_in(2) <= 0 && e3p.degree_in(2) <= 0) {
      rep.notes.push_back("system independent of the line parameter; retrying");
      continue;
    }
    const MultiPoly r1 = resultant(e2p, e3p, 2);
    if (r1.is_zero()) {
      finite = false;
      continue;
    }
    // random shear a1 -> a1 - s a2 so that feet have distinct first coordinates
    bool done = false;
    for (int shear_try = 0; shear_try < 6 && !done; ++shear_try) {
      deadline.check("bottleneck elimination");
      const Scalar s = sample_integer(fs, rng, 9 + shear_try * 10);
      const std::array<MultiPoly, 3> sh{a1 - s * a2, a2, lam};
      const MultiPoly f_s = fa.compose(sh), r1_s = r1.compose(sh);
      if (f_s.degree_in(1) < 1 || r1_s.degree_in(1) < 1) continue;
      const UPoly r2 = res_a2(f_s, r1_s);
      if (r2.is_zero()) {
        finite = false;
        done = true;
        break;
      }
      finite = true;
      UPoly feet = squarefree_part(r2);
      // spurious feet: degenerate normal, lambda at infinity, lambda = 0
      feet = remove_roots(feet, common_roots(f_s, v1.compose(sh), v2.compose(sh)));
      const auto c2 = e2p.coefficients_in(2), c3 = e3p.coefficients_in(2);
      feet = remove_roots(feet, common_roots(f_s, c2.back().compose(sh), c3.back().compose(sh)));
      const UPoly diagonal = common_roots(f_s, c2.front().compose(sh), c3.front().compose(sh));
      bool tangent_pair = false;
      if (!y) {
        feet = remove_roots(feet, diagonal);
      } else if (gcd(feet, diagonal).degree() > 0) {
        // X and Y are tangent: those feet may also carry a genuine partner
        tangent_pair = true;
      }
      if (feet.degree() <= 0) {
        rep.count_closure = 0;
        done = true;
        solved = true;
        break;
      }
      const auto sub = first_subresultant(f_s, r1_s, 1);
      const UPoly s11 = rem(to_upoly(sub[0], 0), feet), s10 = rem(to_upoly(sub[1], 0), feet);
      const auto inv11 = inverse_mod(s11, feet);
      if (!inv11) continue;  // two feet over one abscissa
      const UPoly w = UPoly::x(fs);
      const UPoly y2 = rem(-(s10 * *inv11), feet);
      const UPoly x1 = rem(w - s * y2, feet);
      const std::array<UPoly, 3> vals{x1, y2, UPoly::constant(Scalar::one(fs))};
      std::array<UPoly, 3> ell;
      for (std::size_t i = 0; i < 3; ++i) ell[i] = eval_mod(nf.psi[i], vals, feet);
      // separate lines with random linear functionals
      std::optional<UPoly> den_inv;
      Vec3 rr, rd, rb;
      UPoly alpha(fs), num_b(fs);
      for (int tries = 0; tries < 20 && !den_inv; ++tries) {
        rr = {sample_integer(fs, rng, 30), sample_integer(fs, rng, 30), sample_integer(fs, rng, 30)};
        rd = {sample_integer(fs, rng, 30), sample_integer(fs, rng, 30), sample_integer(fs, rng, 30)};
        rb = {sample_integer(fs, rng, 30), sample_integer(fs, rng, 30), sample_integer(fs, rng, 30)};
        auto lin = [&](const Vec3& r) {
          return rem(UPoly::constant(r[0]) * ell[0] + UPoly::constant(r[1]) * ell[1] + UPoly::constant(r[2]) * ell[2],
                     feet);
        };
        den_inv = inverse_mod(lin(rd), feet);
        if (den_inv) {
          alpha = rem(lin(rr) * *den_inv, feet);
          num_b = rem(lin(rb) * *den_inv, feet);
        }
      }
      if (!den_inv) continue;
      const std::vector<std::string> wv{"w", "W"};
      const MultiPoly mw = from_upoly(feet, fs, wv, 0);
      const MultiPoly wa = MultiPoly::variable(fs, wv, 1) - from_upoly(alpha, fs, wv, 0);
      const UPoly charpoly = to_upoly(resultant(mw, wa, 0), 1);
      if (tangent_pair) {
        rep.notes.push_back("curves are tangent; closure count not certified");
      } else {
        rep.count_closure = squarefree_part(charpoly).degree();
      }
      const Mat3 t_inv_t = transpose(inverse3(t));
      for (const auto& a0 : field_roots(charpoly)) {
        const UPoly g = gcd(feet, alpha - UPoly::constant(a0));
        if (g.degree() <= 0) continue;
        const UPoly bval = rem(num_b, g);
        if (bval.degree() > 0) {
          rep.notes.push_back("line coordinates not constant on a rational fiber");
          continue;
        }
        const Scalar b0 = bval.is_zero() ? Scalar::zero(fs) : bval.coeff(0);
        Vec3 r1v, r2v;
        for (std::size_t i = 0; i < 3; ++i) {
          r1v[i] = rr[i] - a0 * rd[i];
          r2v[i] = rb[i] - b0 * rd[i];
        }
        const Vec3 loc = cross(r1v, r2v);
        if (is_zero_vec(loc)) continue;
        const ProjectiveLine line(mat_vec(t_inv_t, loc));
        if (line == m.h_inf()) continue;
        bool ok;
        if (y) {
          const int nx = eta_fiber_count(x, line, m).regular_points, ny = eta_fiber_count(*y, line, m).regular_points;
          const int shared = distinct_root_count(gcd(normal_feet_form(x, line, m), normal_feet_form(*y, line, m)));
          ok = nx >= 1 && ny >= 1 && !(nx == 1 && ny == 1 && shared >= 1);
        } else {
          ok = eta_fiber_count(x, line, m).regular_points >= 2;
        }
        if (!ok) {
          rep.notes.push_back("candidate line " + line.to_string() + " failed verification");
          continue;
        }
        if (std::find(rep.lines.begin(), rep.lines.end(), line) == rep.lines.end()) rep.lines.push_back(line);
      }
      done = true;
      solved = true;
    }
  }
  rep.finite = finite;
  if (!rep.decided) rep.finite = true;

  // witness pairs from sampled feet
  const auto normals = sample_normal_lines(x, m, 20, rng);
  for (const auto& [a, line] : normals) {
    if (rep.witness_pairs.size() >= 5) break;
    const auto b = line.basis();
    const MultiPoly& geq = other.equation();
    const NormalMap nmo = normal_map(other, m);
    MultiPoly ln(fs, primal_vars());
    for (std::size_t i = 0; i < 3; ++i) ln += line[i] * nmo.n[i];
    const MultiPoly ra = restrict_to_line(geq, b[0], b[1]);
    if (ra.is_zero()) continue;
    BinaryForm g = to_binary_form(ra, 0, 1, other.degree());
    if (!ln.is_zero()) g = gcd(g, to_binary_form(restrict_to_line(ln, b[0], b[1]), 0, 1, other.degree() - 1));
    std::vector<Vec3> cand;
    if (g.infinity_multiplicity() > 0) cand.push_back(b[0]);
    if (g.dehom.degree() > 0) {
      for (const auto& s : field_roots(g.dehom)) {
        cand.push_back({s * b[0][0] + b[1][0], s * b[0][1] + b[1][1], s * b[0][2] + b[1][2]});
      }
    }
    for (const auto& cv : cand) {
      const ProjectivePoint bp(cv);
      if (bp == a || !is_general_point(other, bp, m)) continue;
      if (!(normal_line(other, bp, m) == line)) continue;
      const bool dup = std::any_of(rep.witness_pairs.begin(), rep.witness_pairs.end(), [&](const auto& pr) {
        return (pr.first == a && pr.second == bp) || (pr.first == bp && pr.second == a);
      });
      if (!dup) rep.witness_pairs.emplace_back(a, bp);
      if (rep.witness_pairs.size() >= 5) break;
    }
  }

  if (rep.decided && !rep.finite) {
    try {
      bool whole = false;
      if (y) {
        whole = normal_curves_equal(x, *y, m, rng).equal;
      } else {
        whole = separable_degree(x, m, rng).fiber_e >= 2;
      }
      if (whole) {
        ImplicitOptions opt;
        opt.deadline = deadline;
        rep.component = normal_curve(x, m, rng, opt).poly;
      }
    } catch (const Error& err) {
      rep.notes.push_back(std::string("component not identified: ") + err.what());
    }
  }
  return rep;
}

}  // namespace ng
