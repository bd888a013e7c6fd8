/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "normalgeom/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace ng {

unsigned monomial_degree(Monomial m) {
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) d += exponent_of(m, i);
  return d;
}

namespace {

bool divides(Monomial small, Monomial big) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exponent_of(small, i) > exponent_of(big, i)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> primal_vars() { return {"x", "y", "z"}; }
std::vector<std::string> dual_vars() { return {"u0", "u1", "u2"}; }

MultiPoly::MultiPoly(FieldSpec f, std::vector<std::string> vars) : field_(f), vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) throw Error(Errc::invalid_argument, "at most 4 variables are supported");
}

MultiPoly::MultiPoly(FieldSpec f, std::vector<std::string> vars, std::vector<Term> terms)
    : MultiPoly(f, std::move(vars)) {
  terms_ = std::move(terms);
  normalize();
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

MultiPoly MultiPoly::constant(FieldSpec f, std::vector<std::string> vars, const Scalar& c) {
  return term(f, std::move(vars), c, 0);
}

MultiPoly MultiPoly::variable(FieldSpec f, std::vector<std::string> vars, std::size_t index) {
  return term(f, std::move(vars), Scalar::one(f), monomial_of(index, 1));
}

MultiPoly MultiPoly::term(FieldSpec f, std::vector<std::string> vars, const Scalar& c, Monomial m) {
  MultiPoly p(f, std::move(vars));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

int MultiPoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool MultiPoly::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0); }

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(monomial_degree(t.mono)));
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(exponent_of(t.mono, var)));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = monomial_degree(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return monomial_degree(t.mono) == d; });
}

Scalar MultiPoly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial v) { return t.mono > v; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Scalar::zero(field_);
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!(field_ == o.field_))
    throw Error(Errc::field_mismatch, "polynomials over " + field_.name() + " and " + o.field_.name());
  if (vars_ != o.vars_) throw Error(Errc::invalid_argument, "polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <class Op>
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a, const std::vector<MultiPoly::Term>& b,
                                         Op op) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, op(b[j].coeff)});
      ++j;
    } else {
      Scalar c = a[i].coeff;
      c += op(b[j].coeff);
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (vars_.empty() && terms_.empty() && !o.vars_.empty()) {
    // default-constructed accumulator adopts the other operand's shape
    *this = o;
    return *this;
  }
  check_compatible(o);
  terms_ = merge_terms(terms_, o.terms_, [](const Scalar& c) { return c; });
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (vars_.empty() && terms_.empty() && !o.vars_.empty()) {
    *this = -o;
    return *this;
  }
  check_compatible(o);
  terms_ = merge_terms(terms_, o.terms_, [](const Scalar& c) { return -c; });
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.field_, a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.total_degree() + b.total_degree() > 0xFFFF) throw Error(Errc::internal, "exponent overflow");
  if (b.terms_.size() == 1 || a.terms_.size() == 1) {
    const MultiPoly& big = a.terms_.size() == 1 ? b : a;
    const MultiPoly::Term& t = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    r.terms_.reserve(big.terms_.size());
    for (const auto& u : big.terms_) r.terms_.push_back({u.mono + t.mono, u.coeff * t.coeff});
    return r;  // order preserved by monomial multiplication
  }
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) r.terms_.push_back({ta.mono + tb.mono, ta.coeff * tb.coeff});
  }
  r.normalize();
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.field_ == b.field_) || a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(field_, vars_, Scalar::one(field_));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != vars_.size())
    throw Error(Errc::invalid_argument, "evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                                            std::to_string(vars_.size()));
  // power tables per variable
  std::vector<std::vector<Scalar>> powers(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    const int d = degree_in(v);
    powers[v].push_back(Scalar::one(field_));
    for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  Scalar acc = Scalar::zero(field_);
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      const unsigned e = exponent_of(t.mono, v);
      if (e) c *= powers[v][e];
    }
    acc += c;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw Error(Errc::invalid_argument, "derivative with respect to an unknown variable");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = exponent_of(t.mono, var);
    if (e == 0) continue;
    Scalar c = t.coeff * Scalar(field_, static_cast<long>(e));
    if (c.is_zero()) continue;  // exponents divisible by the characteristic
    out.push_back({t.mono - monomial_of(var, 1), std::move(c)});
  }
  return MultiPoly(field_, vars_, std::move(out));
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (images.size() != vars_.size()) throw Error(Errc::invalid_argument, "compose needs one image per variable");
  const MultiPoly& shape = images[0];
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    const int d = degree_in(v);
    powers[v].push_back(constant(shape.field(), shape.vars(), Scalar::one(shape.field())));
    for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * images[v]);
  }
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    MultiPoly prod = constant(shape.field(), shape.vars(), t.coeff);
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      const unsigned e = exponent_of(t.mono, v);
      if (e) prod = prod * powers[v][e];
    }
    for (auto& u : prod.terms_) acc.push_back(std::move(u));
  }
  return MultiPoly(shape.field(), shape.vars(), std::move(acc));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  const int d = degree_in(var);
  std::vector<std::vector<Term>> buckets(d < 0 ? 0 : d + 1);
  for (const auto& t : terms_) {
    const unsigned e = exponent_of(t.mono, var);
    buckets[e].push_back({t.mono - monomial_of(var, e), t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(field_, vars_, std::move(b));
  return out;
}

MultiPoly MultiPoly::from_coefficients(std::span<const MultiPoly> coeffs, std::size_t var) {
  if (coeffs.empty()) throw Error(Errc::invalid_argument, "from_coefficients needs at least one coefficient");
  std::vector<Term> acc;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms_) acc.push_back({t.mono + monomial_of(var, static_cast<unsigned>(k)), t.coeff});
  }
  return MultiPoly(coeffs[0].field_, coeffs[0].vars_, std::move(acc));
}

MultiPoly MultiPoly::canonical() const {
  if (is_zero()) return *this;
  return terms_.front().coeff.inverse() * *this;
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero() || field_.is_prime()) return canonical();
  mpz_class l = 1, g = 0;
  for (const auto& t : terms_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.rational().get_num_mpz_t());
  }
  mpq_class scale(l, g);
  if (sgn(terms_.front().coeff.rational()) < 0) scale = -scale;
  return Scalar::from_mpq(field_, scale) * *this;
}

MultiPoly MultiPoly::reduce_mod(FieldSpec target) const {
  if (field_ == target) return *this;
  if (!field_.is_rational()) throw Error(Errc::field_mismatch, "reduction needs a rational polynomial");
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({t.mono, Scalar::from_mpq(target, t.coeff.rational())});
  return MultiPoly(target, vars_, std::move(out));
}

MultiPoly MultiPoly::renamed(std::vector<std::string> vars) const {
  if (vars.size() != vars_.size()) throw Error(Errc::invalid_argument, "rename needs the same number of variables");
  MultiPoly r = *this;
  r.vars_ = std::move(vars);
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    bool negative = false;
    if (field_.is_rational() && sgn(c.rational()) < 0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      const unsigned e = exponent_of(t.mono, v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, FieldSpec f) : s_(text), vars_(vars), f_(f) {}

  MultiPoly parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "empty expression");
    MultiPoly acc(f_, vars_);
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    MultiPoly t = term();
    acc += negate ? -t : t;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, std::string("unexpected character '") + c + "'");
      ++pos_;
      MultiPoly next = term();
      if (c == '+') acc += next;
      else acc -= next;
    }
    return acc;
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      skip();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly factor() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "expected a factor after operator");
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpq_class value{mpz_class(digits())};
      skip();
      if (pos_ < s_.size() && peek() == '/') {
        ++pos_;
        skip();
        const std::size_t dpos = pos_;
        std::string d = digits();
        if (d.empty()) throw ParseError(dpos, "expected a denominator");
        mpz_class den(d);
        if (den == 0) throw ParseError(dpos, "zero denominator");
        value /= den;
      }
      Scalar c;
      try {
        c = Scalar::from_mpq(f_, value);
      } catch (const Error&) {
        throw ParseError(start, "literal " + value.get_str() + " is not defined in " + f_.name());
      }
      return MultiPoly::constant(f_, vars_, c);
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError(start, "unknown variable '" + name + "'");
      const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
      unsigned e = 1;
      skip();
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        skip();
        const std::size_t epos = pos_;
        std::string d = digits();
        if (d.empty()) throw ParseError(epos, "expected an exponent");
        if (d.size() > 4 || std::stoul(d) > 0xFFFF) throw ParseError(epos, "exponent too large");
        e = static_cast<unsigned>(std::stoul(d));
      }
      return MultiPoly::term(f_, vars_, Scalar::one(f_), monomial_of(idx, e));
    }
    throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  FieldSpec f_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, FieldSpec f) {
  return Parser(text, vars, f).parse();
}

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var) {
  const int idx = p.var_index(var);
  if (idx < 0) throw Error(Errc::invalid_argument, "unknown variable '" + std::string(var) + "'");
  return p.derivative(static_cast<std::size_t>(idx));
}

MultiPoly restrict_to_line(const MultiPoly& p, std::span<const Scalar, 3> a, std::span<const Scalar, 3> b) {
  if (p.nvars() != 3) throw Error(Errc::invalid_argument, "restrict_to_line needs a ternary polynomial");
  const bool proportional = (a[0] * b[1] - a[1] * b[0]).is_zero() && (a[0] * b[2] - a[2] * b[0]).is_zero() &&
                            (a[1] * b[2] - a[2] * b[1]).is_zero();
  if (proportional) throw Error(Errc::degenerate, "restrict_to_line needs two distinct projective points");
  const FieldSpec f = p.field();
  const std::vector<std::string> st{"s", "t"};
  std::vector<MultiPoly> images;
  for (int i = 0; i < 3; ++i) {
    images.push_back(MultiPoly(f, st, {{monomial_of(0, 1), a[i]}, {monomial_of(1, 1), b[i]}}));
  }
  return p.compose(images);
}

BinaryForm to_binary_form(const MultiPoly& p, std::size_t s_var, std::size_t t_var, int degree) {
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(degree, 0) + 1), Scalar::zero(p.field()));
  for (const auto& t : p.terms()) {
    const unsigned es = exponent_of(t.mono, s_var);
    const unsigned et = exponent_of(t.mono, t_var);
    if (monomial_degree(t.mono) != es + et || static_cast<int>(es + et) != degree)
      throw Error(Errc::internal, "not a binary form of degree " + std::to_string(degree) + ": " + p.to_string());
    c[es] = t.coeff;
  }
  return BinaryForm{UPoly(p.field(), std::move(c)), degree};
}

bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "division by the zero polynomial");
  const FieldSpec f = a.field();
  if (b.is_constant()) {
    quotient = b.leading_term().coeff.inverse() * a;
    return true;
  }
  const auto& lt = b.leading_term();
  const Scalar inv = lt.coeff.inverse();
  std::vector<MultiPoly::Term> q;
  MultiPoly r = a;
  while (!r.is_zero()) {
    const auto& top = r.leading_term();
    if (!divides(lt.mono, top.mono)) return false;
    const Monomial m = top.mono - lt.mono;
    const Scalar c = top.coeff * inv;
    q.push_back({m, c});
    r -= MultiPoly::term(f, a.vars(), c, m) * b;
  }
  quotient = MultiPoly(f, a.vars(), std::move(q));
  return true;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly q;
  if (!try_divide(a, b, q)) throw Error(Errc::internal, "inexact polynomial division");
  return q;
}

MultiPoly normal_form(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return a;
  const auto& lt = b.leading_term();
  const Scalar inv = lt.coeff.inverse();
  std::map<Monomial, Scalar, std::greater<>> work;
  for (const auto& t : a.terms()) work.emplace(t.mono, t.coeff);
  std::vector<MultiPoly::Term> rem;
  while (!work.empty()) {
    auto it = work.begin();
    if (it->second.is_zero()) {
      work.erase(it);
      continue;
    }
    if (divides(lt.mono, it->first)) {
      const Monomial shift = it->first - lt.mono;
      const Scalar c = it->second * inv;
      work.erase(it);
      for (std::size_t k = 1; k < b.terms().size(); ++k) {
        const auto& bt = b.terms()[k];
        auto [pos, inserted] = work.emplace(bt.mono + shift, -(c * bt.coeff));
        if (!inserted) pos->second -= c * bt.coeff;
      }
    } else {
      rem.push_back({it->first, it->second});
      work.erase(it);
    }
  }
  return MultiPoly(a.field(), a.vars(), std::move(rem));
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::invalid_argument, "determinant of an empty matrix");
  const MultiPoly& shape = m[0][0];
  const FieldSpec f = shape.field();
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(f, shape.vars(), Scalar::one(f));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return MultiPoly(f, shape.vars());
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) v -= m[i][k] * m[k][j];
        m[i][j] = divide_exact(v, prev);
      }
      m[i][k] = MultiPoly(f, shape.vars());
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

namespace {

using Coeffs = std::vector<MultiPoly>;

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// lc(B)^(degA - degB + 1) * A = Q * B + R
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const int db = deg(b);
  int e = deg(a) - db + 1;
  const MultiPoly& lb = b.back();
  while (deg(a) >= db && !a.empty()) {
    const int shift = deg(a) - db;
    MultiPoly la = a.back();
    for (auto& c : a) c = lb * c;
    for (int j = 0; j <= db; ++j) a[j + shift] -= la * b[j];
    trim(a);
    --e;
  }
  if (e > 0) {
    MultiPoly s = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = s * c;
  }
  return a;
}

std::pair<Coeffs, Coeffs> split_args(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  if (!(f.field() == g.field()) || f.vars() != g.vars())
    throw Error(Errc::invalid_argument, "resultant of incompatible polynomials");
  if (var >= f.nvars()) throw Error(Errc::invalid_argument, "resultant variable out of range");
  return {f.coefficients_in(var), g.coefficients_in(var)};
}

MultiPoly power_or_zero(const MultiPoly& base, int e, const MultiPoly& one) {
  return e == 0 ? one : base.pow(static_cast<unsigned>(e));
}

}  // namespace

MultiPoly resultant_sylvester(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  auto [a, b] = split_args(f, g, var);
  const MultiPoly zero(f.field(), f.vars());
  const MultiPoly one = MultiPoly::constant(f.field(), f.vars(), Scalar::one(f.field()));
  if (a.empty() || b.empty()) return zero;
  const int m = deg(a), n = deg(b);
  if (m == 0 && n == 0) throw Error(Errc::invalid_argument, "resultant of two polynomials constant in the variable");
  if (m == 0) return power_or_zero(a[0], n, one);
  if (n == 0) return power_or_zero(b[0], m, one);
  const int size = m + n;
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, zero));
  // rows hold coefficients from the top power down
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
  return determinant(std::move(s));
}

MultiPoly resultant_subresultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  auto [a, b] = split_args(f, g, var);
  const MultiPoly zero(f.field(), f.vars());
  const MultiPoly one = MultiPoly::constant(f.field(), f.vars(), Scalar::one(f.field()));
  if (a.empty() || b.empty()) return zero;
  if (deg(a) == 0 && deg(b) == 0)
    throw Error(Errc::invalid_argument, "resultant of two polynomials constant in the variable");
  if (deg(a) == 0) return power_or_zero(a[0], deg(b), one);
  if (deg(b) == 0) return power_or_zero(b[0], deg(a), one);
  bool negate = false;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if ((deg(a) & 1) && (deg(b) & 1)) negate = true;
  }
  MultiPoly gg = one, h = one;
  for (;;) {
    const int delta = deg(a) - deg(b);
    if ((deg(a) & 1) && (deg(b) & 1)) negate = !negate;
    Coeffs r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return zero;
    const MultiPoly divisor = gg * power_or_zero(h, delta, one);
    for (auto& c : r) c = divide_exact(c, divisor);
    b = std::move(r);
    gg = a.back();
    if (delta >= 1) h = divide_exact(power_or_zero(gg, delta, one), power_or_zero(h, delta - 1, one));
    if (deg(b) == 0) {
      MultiPoly res = divide_exact(power_or_zero(b.back(), deg(a), one), power_or_zero(h, deg(a) - 1, one));
      return negate ? -res : res;
    }
  }
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  return f.field().is_rational() ? resultant_subresultant(f, g, var) : resultant_sylvester(f, g, var);
}

std::array<MultiPoly, 2> first_subresultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  auto [a, b] = split_args(f, g, var);
  const int m = deg(a), n = deg(b);
  if (m < 1 || n < 1 || m + n < 3) throw Error(Errc::invalid_argument, "first subresultant needs degrees m, n >= 1, m + n >= 3");
  const MultiPoly zero(f.field(), f.vars());
  const int rows = m + n - 2;
  const int cols = m + n - 1;
  // column c holds the coefficient of var^(cols - 1 - c)
  std::vector<std::vector<MultiPoly>> full(rows, std::vector<MultiPoly>(cols, zero));
  for (int i = 0; i < n - 1; ++i)
    for (int k = 0; k <= m; ++k) full[i][i + k] = a[m - k];
  for (int i = 0; i < m - 1; ++i)
    for (int k = 0; k <= n; ++k) full[n - 1 + i][i + k] = b[n - k];
  auto pick = [&](int last_col) {
    std::vector<std::vector<MultiPoly>> sub(rows, std::vector<MultiPoly>(rows, zero));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < rows - 1; ++c) sub[r][c] = full[r][c];
      sub[r][rows - 1] = full[r][last_col];
    }
    return determinant(std::move(sub));
  };
  return {pick(cols - 2), pick(cols - 1)};
}

UPoly to_upoly(const MultiPoly& p, std::size_t var) {
  const int d = p.degree_in(var);
  std::vector<Scalar> c(d < 0 ? 0 : d + 1, Scalar::zero(p.field()));
  for (const auto& t : p.terms()) {
    const unsigned e = exponent_of(t.mono, var);
    if (t.mono != monomial_of(var, e)) throw Error(Errc::internal, "polynomial is not univariate in the requested variable");
    c[e] = t.coeff;
  }
  return UPoly(p.field(), std::move(c));
}

MultiPoly from_upoly(const UPoly& u, FieldSpec f, std::vector<std::string> vars, std::size_t var) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    if (!u.coeffs()[i].is_zero()) terms.push_back({monomial_of(var, static_cast<unsigned>(i)), u.coeffs()[i]});
  }
  return MultiPoly(f, std::move(vars), std::move(terms));
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  std::function<void(std::size_t, unsigned, Monomial)> rec = [&](std::size_t v, unsigned left, Monomial acc) {
    if (v + 1 == nvars) {
      out.push_back(acc + monomial_of(v, left));
      return;
    }
    for (int e = static_cast<int>(left); e >= 0; --e) rec(v + 1, left - e, acc + monomial_of(v, e));
  };
  if (nvars == 0) return out;
  rec(0, d, 0);
  return out;
}

}  // namespace ng
