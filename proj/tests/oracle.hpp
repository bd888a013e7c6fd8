/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Naive reference arithmetic used as an independent check on the library.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "normalgeom/poly.hpp"

namespace oracle {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;             // low degree first, over F_p
using Bivariate = std::vector<std::vector<u64>>;  // c[i][j] for x^i y^j

inline u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
inline u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 subm(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
inline u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  for (a %= p; e; e >>= 1, a = mulm(a, a, p))
    if (e & 1) r = mulm(r, a, p);
  return r;
}
inline u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline u64 eval(const Poly& f, u64 x, u64 p) {
  u64 r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = addm(mulm(r, x, p), *it, p);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
  trim(r);
  return r;
}

inline Poly rem(Poly a, const Poly& b, u64 p) {
  trim(a);
  const u64 inv = invm(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 c = mulm(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = subm(a[shift + i], mulm(c, b[i], p), p);
    trim(a);
  }
  return a;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly derivative(const Poly& f, u64 p) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulm(f[i], i % p, p));
  trim(d);
  return d;
}

/// Distinct roots over the closure; valid for p > deg f.
inline int distinct_roots(const Poly& f, u64 p) { return deg(f) - deg(gcd(f, derivative(f, p), p)); }

inline u64 det(std::vector<std::vector<u64>> m, u64 p) {
  const std::size_t n = m.size();
  u64 d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = subm(0, d, p);
    }
    d = mulm(d, m[c][c], p);
    const u64 inv = invm(m[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const u64 f = mulm(m[r][c], inv, p);
      for (std::size_t k = c; k < n; ++k) m[r][k] = subm(m[r][k], mulm(f, m[c][k], p), p);
    }
  }
  return d;
}

/// Sylvester determinant of f and g with their nominal degrees.
inline u64 resultant(const Poly& f, const Poly& g, u64 p) {
  const int m = deg(f), n = deg(g);
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<u64>> s(size, std::vector<u64>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = f[static_cast<std::size_t>(m - i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = g[static_cast<std::size_t>(n - i)];
  return det(s, p);
}

/// Lagrange interpolation through (xs[i], ys[i]).
inline Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  Poly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis{1};
    u64 denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = mul(basis, Poly{subm(0, xs[j], p), 1}, p);
      denom = mulm(denom, subm(xs[i], xs[j], p), p);
    }
    const u64 c = mulm(ys[i], invm(denom, p), p);
    if (out.size() < basis.size()) out.resize(basis.size(), 0);
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] = addm(out[k], mulm(c, basis[k], p), p);
  }
  trim(out);
  return out;
}

inline Bivariate bmul(const Bivariate& a, const Bivariate& b, u64 p) {
  Bivariate r(a.size() + b.size() - 1, std::vector<u64>(a[0].size() + b[0].size() - 1, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j])
        for (std::size_t k = 0; k < b.size(); ++k)
          for (std::size_t l = 0; l < b[k].size(); ++l) r[i + k][j + l] = addm(r[i + k][j + l], mulm(a[i][j], b[k][l], p), p);
  return r;
}

/// F(M (x, y, 1)) for a ternary form over F_p given by its terms.
inline Bivariate transform(const ng::MultiPoly& f, const u64 m[3][3], u64 p) {
  const int d = f.total_degree();
  Bivariate out(static_cast<std::size_t>(d + 1), std::vector<u64>(static_cast<std::size_t>(d + 1), 0));
  for (const auto& t : f.terms()) {
    Bivariate acc{{t.coeff.residue()}};
    for (std::size_t v = 0; v < 3; ++v) {
      const Bivariate lin{{m[v][2], m[v][1]}, {m[v][0], 0}};
      for (unsigned e = 0; e < ng::exponent_of(t.mono, v); ++e) acc = bmul(acc, lin, p);
    }
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < acc[i].size(); ++j)
        if (i < out.size() && j < out[i].size()) out[i][j] = addm(out[i][j], acc[i][j], p);
  }
  return out;
}

/// Univariate in y after fixing x.
inline Poly at_x(const Bivariate& b, u64 x, u64 p) {
  Poly r(b[0].size(), 0);
  u64 xp = 1;
  for (std::size_t i = 0; i < b.size(); ++i, xp = mulm(xp, x, p))
    for (std::size_t j = 0; j < b[i].size(); ++j) r[j] = addm(r[j], mulm(b[i][j], xp, p), p);
  return r;
}

/// Distinct projective common zeros of two ternary forms over the closure of
/// F_p, by a random change of coordinates and an interpolated resultant.
/// Maximized over a few coordinate changes.
inline int intersection_count(const ng::MultiPoly& f, const ng::MultiPoly& g, u64 p, std::mt19937_64& rng, int tries = 3) {
  std::uniform_int_distribution<u64> coef(0, p - 1);
  const int df = f.total_degree(), dg = g.total_degree();
  int best = 0;
  for (int t = 0, guard = 0; t < tries && guard < 50; ++guard) {
    u64 m[3][3];
    std::vector<std::vector<u64>> mm(3, std::vector<u64>(3));
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mm[i][j] = m[i][j] = coef(rng);
    } while (det(mm, p) == 0);
    const Bivariate bf = transform(f, m, p), bg = transform(g, m, p);
    // the point at infinity of the y-direction must lie on neither curve
    if (at_x(bf, 0, p).back() == 0 || at_x(bg, 0, p).back() == 0) continue;
    std::vector<u64> xs, ys;
    for (u64 x = 1; static_cast<int>(xs.size()) <= df * dg; ++x) {
      xs.push_back(x);
      ys.push_back(resultant(at_x(bf, x, p), at_x(bg, x, p), p));
    }
    const Poly r = interpolate(xs, ys, p);
    if (r.empty()) return -1;  // common component
    best = std::max(best, distinct_roots(r, p));
    ++t;
  }
  return best;
}

using Vec = std::array<u64, 3>;

/// Value of a ternary form at v over F_p, from its terms.
inline u64 eval3(const ng::MultiPoly& f, const Vec& v, u64 p) {
  u64 r = 0;
  for (const auto& t : f.terms()) {
    u64 m = t.coeff.residue();
    for (std::size_t i = 0; i < 3; ++i) m = mulm(m, powm(v[i], ng::exponent_of(t.mono, i), p), p);
    r = addm(r, m, p);
  }
  return r;
}

/// Partial derivative in variable i at v, by the power rule on each term.
inline u64 partial3(const ng::MultiPoly& f, const Vec& v, std::size_t i, u64 p) {
  u64 r = 0;
  for (const auto& t : f.terms()) {
    const unsigned e = ng::exponent_of(t.mono, i);
    if (e == 0) continue;
    u64 m = mulm(t.coeff.residue(), e % p, p);
    for (std::size_t k = 0; k < 3; ++k) m = mulm(m, powm(v[k], ng::exponent_of(t.mono, k) - (k == i ? 1 : 0), p), p);
    r = addm(r, m, p);
  }
  return r;
}

inline Vec cross3(const Vec& a, const Vec& b, u64 p) {
  return {subm(mulm(a[1], b[2], p), mulm(a[2], b[1], p), p), subm(mulm(a[2], b[0], p), mulm(a[0], b[2], p), p),
          subm(mulm(a[0], b[1], p), mulm(a[1], b[0], p), p)};
}

inline u64 dot3(const Vec& a, const Vec& b, u64 p) {
  return addm(addm(mulm(a[0], b[0], p), mulm(a[1], b[1], p), p), mulm(a[2], b[2], p), p);
}

/// Scaled so the first nonzero entry is 1; zero stays zero.
inline Vec normalize3(Vec v, u64 p) {
  for (u64 c : v) {
    if (c == 0) continue;
    const u64 inv = invm(c, p);
    for (auto& x : v) x = mulm(x, inv, p);
    break;
  }
  return v;
}

/// Euclidean normal line at v (line at infinity z = 0, form x^2 + y^2):
/// the join of v with (F_x : F_y : 0).
inline Vec euclidean_normal(const ng::MultiPoly& f, const Vec& v, u64 p) {
  return normalize3(cross3(v, Vec{partial3(f, v, 0, p), partial3(f, v, 1, p), 0}, p), p);
}

/// Points of P^2(F_p) on f, by enumeration.
inline std::vector<Vec> points_on(const ng::MultiPoly& f, u64 p) {
  std::vector<Vec> out;
  for (u64 x = 0; x < p; ++x)
    for (u64 y = 0; y < p; ++y)
      if (eval3(f, {x, y, 1}, p) == 0) out.push_back({x, y, 1});
  for (u64 x = 0; x < p; ++x)
    if (eval3(f, {x, 1, 0}, p) == 0) out.push_back({x, 1, 0});
  if (eval3(f, {1, 0, 0}, p) == 0) out.push_back({1, 0, 0});
  return out;
}

/// Restriction of a function on P^2 of degree d to the line l, as a
/// polynomial in s for the points a + s b; b is chosen off the zero set of f.
struct LineParam {
  Vec a, b;
};

inline LineParam parametrize(const Vec& l, const ng::MultiPoly& f, u64 p, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> coef(0, p - 1);
  for (;;) {
    const Vec a = cross3(l, {coef(rng), coef(rng), coef(rng)}, p);
    const Vec b = cross3(l, {coef(rng), coef(rng), coef(rng)}, p);
    if (normalize3(a, p) == normalize3(b, p) || a == Vec{0, 0, 0} || b == Vec{0, 0, 0}) continue;
    if (eval3(f, b, p) == 0) continue;
    return {a, b};
  }
}

template <class Fn>
Poly restrict_to(const LineParam& lp, int degree, u64 p, Fn value) {
  std::vector<u64> xs, ys;
  for (u64 s = 0; static_cast<int>(s) <= degree; ++s) {
    Vec v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = addm(lp.a[i], mulm(s, lp.b[i], p), p);
    xs.push_back(s);
    ys.push_back(value(v));
  }
  return interpolate(xs, ys, p);
}

/// Distinct points over the closure of F_p where f meets l and the Euclidean
/// normal line is l, excluding points at infinity.
inline int feet_count(const ng::MultiPoly& f, const Vec& l, u64 p, std::mt19937_64& rng) {
  const int d = f.total_degree();
  const LineParam lp = parametrize(l, f, p, rng);
  const Poly fl = restrict_to(lp, d, p, [&](const Vec& v) { return eval3(f, v, p); });
  const Poly gl = restrict_to(lp, d, p, [&](const Vec& v) {
    return addm(mulm(l[0], partial3(f, v, 0, p), p), mulm(l[1], partial3(f, v, 1, p), p), p);
  });
  Poly g = gl.empty() ? fl : gcd(fl, gl, p);
  int count = distinct_roots(g, p);
  // the point of l on z = 0, at s = -a_z / b_z
  if (lp.b[2] != 0) {
    const u64 s = mulm(subm(0, lp.a[2], p), invm(lp.b[2], p), p);
    if (!g.empty() && eval(g, s, p) == 0) --count;
  }
  return count;
}

}  // namespace oracle
