/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "normalgeom/error.hpp"

namespace ng {

/// Coefficient field: the rationals or a prime field F_p with p odd and
/// below 2^62. Characteristic 2 is rejected.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::uint64_t p);
  /// 0 selects the rationals.
  static FieldSpec from_characteristic(std::uint64_t c) { return c == 0 ? rationals() : prime(c); }

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// An exact field element in canonical form: a reduced fraction with positive
/// denominator, or a residue in [0, p).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(FieldSpec f, long v);
  static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1); }
  static Scalar from_mpz(FieldSpec f, const mpz_class& v);
  /// Throws Errc::division_by_zero if the denominator vanishes mod p.
  static Scalar from_mpq(FieldSpec f, const mpq_class& v);
  static Scalar from_residue(FieldSpec f, std::uint64_t r);

  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Valid only over F_p.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  /// Valid only over Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  /// Exact equality; mixing fields compares unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "n" or "n/d" over Q, the residue over F_p.
  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

using Rng = std::mt19937_64;

/// Uniform residue over F_p; over Q a fraction n/d with |n| <= bound and
/// 1 <= d <= bound.
Scalar sample_uniform(FieldSpec spec, Rng& rng, long bound);

/// Uniform nonzero element, same conventions.
Scalar sample_nonzero(FieldSpec spec, Rng& rng, long bound);

/// Uniform small integer in [-bound, bound] mapped into the field.
Scalar sample_integer(FieldSpec spec, Rng& rng, long bound);

}  // namespace ng
