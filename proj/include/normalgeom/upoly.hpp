/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <utility>
#include <vector>

#include "normalgeom/field.hpp"

namespace ng {

/// Dense univariate polynomial, coefficients stored low degree first and
/// trimmed so the leading coefficient is nonzero.
class UPoly {
 public:
  explicit UPoly(FieldSpec f = FieldSpec{}) : field_(f) {}
  UPoly(FieldSpec f, std::vector<Scalar> coeffs);

  static UPoly constant(const Scalar& c);
  static UPoly monomial(const Scalar& c, std::size_t k);
  static UPoly x(FieldSpec f) { return monomial(Scalar::one(f), 1); }

  FieldSpec field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }
  const Scalar& lead() const { return c_.back(); }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Scalar& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  UPoly monic() const;
  UPoly derivative() const;
  Scalar eval(const Scalar& v) const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<Scalar> c_;
};

/// Quotient and remainder; throws on a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// base^e mod m.
UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m);

/// Monic product of the distinct irreducible factors. In characteristic p an
/// inseparable part g(x^p) is handled by exponent descent.
UPoly squarefree_part(const UPoly& f);

/// Distinct roots in F_p, ascending by residue.
std::vector<Scalar> roots_fp(const UPoly& f);

/// Distinct rational roots of a polynomial over Q, ascending.
std::vector<Scalar> rational_roots(const UPoly& f);

/// Roots lying in the base field itself (F_p or Q).
std::vector<Scalar> field_roots(const UPoly& f);

/// A binary form F(s, t) of fixed homogeneous degree, stored dehomogenized at
/// t = 1: the coefficient of s^i t^(deg - i) is dehom.coeff(i). The point
/// (1:0) is a root of multiplicity degree - dehom.degree().
struct BinaryForm {
  UPoly dehom;
  int degree = 0;

  bool is_zero() const { return dehom.is_zero(); }
  int infinity_multiplicity() const { return degree - dehom.degree(); }
};

/// Number of distinct roots on the projective line over the algebraic
/// closure. Throws on the zero form.
int distinct_root_count(const BinaryForm& f);
/// Gcd of binary forms; the zero form is the identity.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);
/// Squarefree lcm (the union of root sets); zero forms are skipped.
BinaryForm radical_union(const BinaryForm& a, const BinaryForm& b);

}  // namespace ng
