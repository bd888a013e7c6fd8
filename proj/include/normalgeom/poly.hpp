/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normalgeom/field.hpp"
#include "normalgeom/upoly.hpp"

namespace ng {

/// Packed exponent vector: up to four variables, 16 bits each, the first
/// variable in the most significant bits. Integer order is lex order.
using Monomial = std::uint64_t;
inline constexpr std::size_t kMaxVars = 4;

inline unsigned exponent_of(Monomial m, std::size_t var) {
  return static_cast<unsigned>((m >> (48 - 16 * var)) & 0xFFFFu);
}
inline Monomial monomial_of(std::size_t var, unsigned e) {
  return static_cast<Monomial>(e) << (48 - 16 * var);
}
unsigned monomial_degree(Monomial m);

/// Sparse multivariate polynomial over named variables. Terms are kept in
/// strictly descending lex order with no zero coefficients, which makes
/// structural equality the polynomial equality.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Scalar coeff;
  };

  MultiPoly() = default;
  MultiPoly(FieldSpec f, std::vector<std::string> vars);
  /// Terms in any order; like monomials are combined and zeros dropped.
  MultiPoly(FieldSpec f, std::vector<std::string> vars, std::vector<Term> terms);

  static MultiPoly constant(FieldSpec f, std::vector<std::string> vars, const Scalar& c);
  static MultiPoly variable(FieldSpec f, std::vector<std::string> vars, std::size_t index);
  static MultiPoly term(FieldSpec f, std::vector<std::string> vars, const Scalar& c, Monomial m);

  FieldSpec field() const noexcept { return field_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  /// Index of a variable name, or -1.
  int var_index(std::string_view name) const;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// -1 for zero.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  const Term& leading_term() const { return terms_.front(); }
  Scalar coefficient(Monomial m) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(unsigned e) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  MultiPoly derivative(std::size_t var) const;
  /// Substitutes images[i] for variable i; the images share one variable list.
  MultiPoly compose(std::span<const MultiPoly> images) const;
  /// Coefficients with respect to one variable, index = power.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(std::span<const MultiPoly> coeffs, std::size_t var);

  /// Scaled so the lex-leading coefficient is 1.
  MultiPoly canonical() const;
  /// Over Q: integer coefficients with content 1 and positive lex-leading
  /// coefficient. Over F_p: same as canonical().
  MultiPoly primitive() const;
  /// Reduction of a rational polynomial into F_p; throws if a denominator
  /// vanishes mod p.
  MultiPoly reduce_mod(FieldSpec target) const;
  /// Same polynomial over a different variable list of equal length.
  MultiPoly renamed(std::vector<std::string> vars) const;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;
  void normalize();

  FieldSpec field_;
  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

/// Standard variable lists.
std::vector<std::string> primal_vars();  // x y z
std::vector<std::string> dual_vars();    // u0 u1 u2

/// Grammar: poly := ["+"|"-"] term (("+"|"-") term)*, term := factor ("*" factor)*,
/// factor := integer ["/" integer] | var ["^" nat]. Whitespace is ignored.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, FieldSpec f);

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var);

/// P(s*a + t*b) as a polynomial in (s, t). Requires three variables.
MultiPoly restrict_to_line(const MultiPoly& p, std::span<const Scalar, 3> a, std::span<const Scalar, 3> b);

/// Reads a homogeneous polynomial in variables (s_var, t_var) as a binary
/// form of the given degree; other variables must not occur.
BinaryForm to_binary_form(const MultiPoly& p, std::size_t s_var, std::size_t t_var, int degree);

/// Exact quotient; throws Errc::internal if b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);
/// Whether b divides a, and the quotient if so.
bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient);
/// Remainder of a modulo the single polynomial b (lex order). Unique, and
/// linear in a, because {b} is a Groebner basis of (b).
MultiPoly normal_form(const MultiPoly& a, const MultiPoly& b);

/// Fraction-free (Bareiss) determinant.
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

/// Sylvester resultant with respect to var. Uses the subresultant PRS over Q
/// and a fraction-free Sylvester determinant over F_p.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);
MultiPoly resultant_sylvester(const MultiPoly& f, const MultiPoly& g, std::size_t var);
MultiPoly resultant_subresultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// First subresultant S_1 = s11 * var + s10 of f and g, returned as {s11, s10}
/// (both free of var).
std::array<MultiPoly, 2> first_subresultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// Univariate view of a polynomial in a single occurring variable.
UPoly to_upoly(const MultiPoly& p, std::size_t var);
MultiPoly from_upoly(const UPoly& u, FieldSpec f, std::vector<std::string> vars, std::size_t var);

/// All monomials of total degree d in n variables, descending lex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

}  // namespace ng
