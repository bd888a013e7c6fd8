/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "normalgeom/upoly.hpp"

#include <algorithm>

namespace ng {

UPoly::UPoly(FieldSpec f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const Scalar& c, std::size_t k) {
  std::vector<Scalar> v(k + 1, Scalar::zero(c.field()));
  v[k] = c;
  return UPoly(c.field(), std::move(v));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(a.field_, std::move(r));
}

UPoly operator*(const Scalar& s, const UPoly& a) {
  UPoly r = a;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return lead().inverse() * *this;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(field_);
  std::vector<Scalar> r;
  r.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(Scalar(field_, static_cast<long>(i)) * c_[i]);
  return UPoly(field_, std::move(r));
}

Scalar UPoly::eval(const Scalar& v) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= v;
    acc += *it;
  }
  return acc;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  const FieldSpec f = a.field();
  if (a.degree() < b.degree()) return {UPoly(f), a};
  std::vector<Scalar> r = a.coeffs();
  std::vector<Scalar> q(a.degree() - b.degree() + 1, Scalar::zero(f));
  const Scalar inv_lead = b.lead().inverse();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    Scalar factor = r[i] * inv_lead;
    q[i - db] = factor;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= factor * b.coeffs()[j];
  }
  return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m) {
  UPoly result = UPoly::constant(Scalar::one(base.field()));
  UPoly b = rem(base, m);
  result = rem(result, m);
  while (e) {
    if (e & 1) result = rem(result * b, m);
    e >>= 1;
    if (e) b = rem(b * b, m);
  }
  return result;
}

namespace {

// f(x) = g(x^p) over F_p; returns g (Frobenius fixes F_p, so coefficients are
// their own p-th roots).
UPoly pth_root(const UPoly& f) {
  const std::uint64_t p = f.field().characteristic();
  std::vector<Scalar> g;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) g.push_back(f.coeffs()[i]);
  return UPoly(f.field(), std::move(g));
}

}  // namespace

UPoly squarefree_part(const UPoly& f) {
  if (f.is_zero()) throw Error(Errc::invalid_argument, "squarefree part of the zero polynomial");
  const FieldSpec fs = f.field();
  if (f.degree() == 0) return UPoly::constant(Scalar::one(fs));
  UPoly d = f.derivative();
  if (d.is_zero()) return squarefree_part(pth_root(f));
  UPoly g = gcd(f, d);
  UPoly w = divmod(f, g).first.monic();
  if (fs.is_rational()) return w;
  // strip factors of w from g; what remains is a p-th power
  UPoly y = gcd(w, g);
  while (y.degree() > 0) {
    g = divmod(g, y).first;
    y = gcd(y, g);
  }
  if (g.degree() <= 0) return w;
  return (w * squarefree_part(pth_root(g))).monic();
}

std::vector<Scalar> roots_fp(const UPoly& f) {
  const FieldSpec fs = f.field();
  if (!fs.is_prime()) throw Error(Errc::invalid_argument, "roots_fp needs a prime field");
  if (f.is_zero()) throw Error(Errc::invalid_argument, "roots of the zero polynomial");
  const std::uint64_t p = fs.characteristic();
  UPoly m = f.monic();
  if (m.degree() <= 0) return {};
  UPoly xp = powmod(UPoly::x(fs), p, m);
  UPoly g = gcd(m, xp - UPoly::x(fs));
  std::vector<Scalar> out;
  std::vector<UPoly> stack{g};
  Rng rng(0x5eed);
  while (!stack.empty()) {
    UPoly h = std::move(stack.back());
    stack.pop_back();
    if (h.degree() <= 0) continue;
    if (h.degree() == 1) {
      out.push_back(-h.coeff(0) / h.coeff(1));
      continue;
    }
    for (;;) {
      Scalar a = sample_uniform(fs, rng, 1);
      UPoly shifted = UPoly::x(fs) + UPoly::constant(a);
      UPoly w = powmod(shifted, (p - 1) / 2, h) - UPoly::constant(Scalar::one(fs));
      UPoly d = gcd(h, w);
      if (d.degree() > 0 && d.degree() < h.degree()) {
        stack.push_back(divmod(h, d).first);
        stack.push_back(std::move(d));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
  return out;
}

namespace {

mpz_class rational_reconstruct_bound(const mpz_class& m) {
  mpz_class half = m / 2;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), half.get_mpz_t());
  return r;
}

bool rational_reconstruct(const mpz_class& a, const mpz_class& m, mpq_class& out) {
  const mpz_class bound = rational_reconstruct_bound(m);
  mpz_class r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  out = mpq_class(r1, s1);
  out.canonicalize();
  return true;
}

mpz_class eval_mod(const std::vector<mpz_class>& poly, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

}  // namespace

std::vector<Scalar> rational_roots(const UPoly& f) {
  const FieldSpec fs = f.field();
  if (!fs.is_rational()) throw Error(Errc::invalid_argument, "rational_roots needs Q");
  if (f.is_zero()) throw Error(Errc::invalid_argument, "roots of the zero polynomial");
  UPoly g = squarefree_part(f);
  std::vector<Scalar> out;
  if (g.degree() <= 0) return out;
  if (g.coeff(0).is_zero()) {
    out.push_back(Scalar::zero(fs));
    g = divmod(g, UPoly::x(fs)).first;
  }
  if (g.degree() >= 1) {
    // clear denominators into a primitive integer polynomial
    mpz_class lcm = 1;
    for (const auto& c : g.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> P;
    for (const auto& c : g.coeffs()) P.push_back(mpz_class(c.rational() * lcm));
    std::vector<mpz_class> dP;
    for (std::size_t i = 1; i < P.size(); ++i) dP.push_back(P[i] * static_cast<unsigned long>(i));
    const mpz_class bound = std::max(abs(P.front()), abs(P.back()));
    const mpz_class target = 2 * bound * bound + 1;

    std::uint64_t prime = (1ull << 31) - 1;
    for (;; prime -= 2) {
      if (!is_prime_u64(prime)) continue;
      if (P.back() % static_cast<unsigned long>(prime) == 0) continue;
      FieldSpec fp = FieldSpec::prime(prime);
      std::vector<Scalar> red;
      for (const auto& c : P) red.push_back(Scalar::from_mpz(fp, c));
      UPoly gp(fp, red);
      if (gcd(gp, gp.derivative()).degree() != 0) continue;
      for (const Scalar& r : roots_fp(gp)) {
        mpz_class modulus = static_cast<unsigned long>(prime);
        mpz_class x = static_cast<unsigned long>(r.residue());
        while (modulus <= target) {
          modulus *= modulus;
          mpz_class num = eval_mod(P, x, modulus);
          mpz_class den = eval_mod(dP, x, modulus);
          mpz_class inv;
          if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) break;
          x = (x - num * inv) % modulus;
          if (x < 0) x += modulus;
        }
        mpq_class cand;
        if (!rational_reconstruct(x, modulus, cand)) continue;
        Scalar s = Scalar::from_mpq(fs, cand);
        if (g.eval(s).is_zero()) out.push_back(s);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.rational() < b.rational(); });
  return out;
}

std::vector<Scalar> field_roots(const UPoly& f) {
  return f.field().is_prime() ? roots_fp(f) : rational_roots(f);
}

int distinct_root_count(const BinaryForm& f) {
  if (f.is_zero()) throw Error(Errc::invalid_argument, "distinct roots of the zero form");
  const int finite = squarefree_part(f.dehom).degree();
  return finite + (f.infinity_multiplicity() > 0 ? 1 : 0);
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  UPoly g = gcd(a.dehom, b.dehom);
  const int inf = std::min(a.infinity_multiplicity(), b.infinity_multiplicity());
  return BinaryForm{g, g.degree() + inf};
}

BinaryForm radical_union(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b.is_zero() ? b : BinaryForm{squarefree_part(b.dehom), squarefree_part(b.dehom).degree() + (b.infinity_multiplicity() > 0)};
  if (b.is_zero()) return radical_union(b, a);
  UPoly ra = squarefree_part(a.dehom);
  UPoly rb = squarefree_part(b.dehom);
  UPoly u = divmod(ra * rb, gcd(ra, rb)).first.monic();
  const int inf = (a.infinity_multiplicity() > 0 || b.infinity_multiplicity() > 0) ? 1 : 0;
  return BinaryForm{u, u.degree() + inf};
}

}  // namespace ng
