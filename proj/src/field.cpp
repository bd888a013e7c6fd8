/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "normalgeom/field.hpp"

#include <array>

namespace ng {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::parse: return "parse";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::hypothesis: return "hypothesis";
    case Errc::degenerate: return "degenerate";
    case Errc::unstable: return "unstable";
    case Errc::budget: return "budget";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 128-bit to stay clear of overflow
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  if (new_r == 0) throw Error(Errc::division_by_zero, "inverse of zero in F_" + std::to_string(p));
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw Error(Errc::hypothesis, "characteristic 2 is not supported");
  if (p >= (1ull << 62) || !is_prime_u64(p))
    throw Error(Errc::invalid_argument, "modulus " + std::to_string(p) + " is not an odd prime below 2^62");
  FieldSpec f;
  f.p_ = p;
  return f;
}

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar::Scalar(FieldSpec f, long v) : field_(f) {
  if (f.is_rational()) {
    value_ = mpq_class(v);
  } else {
    const auto p = static_cast<__int128>(f.characteristic());
    __int128 r = static_cast<__int128>(v) % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  }
}

Scalar Scalar::from_mpz(FieldSpec f, const mpz_class& v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.value_ = mpq_class(v);
  } else {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), f.characteristic());
    s.value_ = static_cast<std::uint64_t>(r.get_ui());
  }
  return s;
}

Scalar Scalar::from_mpq(FieldSpec f, const mpq_class& v) {
  if (f.is_rational()) {
    Scalar s;
    s.field_ = f;
    mpq_class c = v;
    c.canonicalize();
    s.value_ = std::move(c);
    return s;
  }
  Scalar num = from_mpz(f, v.get_num());
  Scalar den = from_mpz(f, v.get_den());
  if (den.is_zero())
    throw Error(Errc::division_by_zero, "denominator of " + v.get_str() + " vanishes in " + f.name());
  return num / den;
}

Scalar Scalar::from_residue(FieldSpec f, std::uint64_t r) {
  if (f.is_rational()) return from_mpz(f, mpz_class(std::to_string(r)));
  Scalar s;
  s.field_ = f;
  s.value_ = r % f.characteristic();
  return s;
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error(Errc::field_mismatch, "mixed-field operands: " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    if (v != 0) v = field_.characteristic() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(value_);
    v += std::get<std::uint64_t>(o.value_);
    if (v >= p) v -= p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(value_);
    const std::uint64_t w = std::get<std::uint64_t>(o.value_);
    v = v >= w ? v - w : v + p - w;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = mul_mod(v, std::get<std::uint64_t>(o.value_), field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw Error(Errc::division_by_zero, "division by zero in " + field_.name());
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    const std::uint64_t p = field_.characteristic();
    v = mul_mod(v, inv_mod(std::get<std::uint64_t>(o.value_), p), p);
  }
  return *this;
}

Scalar Scalar::inverse() const { return one(field_) / *this; }

Scalar Scalar::pow(std::uint64_t e) const {
  if (field_.is_prime()) {
    return from_residue(field_, pow_mod(std::get<std::uint64_t>(value_), e, field_.characteristic()));
  }
  Scalar base = *this;
  Scalar r = one(field_);
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_rational()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

Scalar sample_uniform(FieldSpec spec, Rng& rng, long bound) {
  if (spec.is_prime()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, spec.characteristic() - 1);
    return Scalar::from_residue(spec, dist(rng));
  }
  if (bound < 1) throw Error(Errc::invalid_argument, "sampling bound must be at least 1");
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  const long n = num(rng);
  const long d = den(rng);
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar::from_mpq(spec, q);
}

Scalar sample_nonzero(FieldSpec spec, Rng& rng, long bound) {
  for (;;) {
    Scalar s = sample_uniform(spec, rng, bound);
    if (!s.is_zero()) return s;
  }
}

Scalar sample_integer(FieldSpec spec, Rng& rng, long bound) {
  if (spec.is_prime()) return sample_uniform(spec, rng, bound);
  std::uniform_int_distribution<long> dist(-bound, bound);
  return Scalar(spec, dist(rng));
}

}  // namespace ng
