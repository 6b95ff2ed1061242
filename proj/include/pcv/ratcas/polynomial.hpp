/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pcv/ratcas/rational.hpp"

namespace pcv::ratcas {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector x0^e0 * x1^e1 * ... over at most kMaxVariables coordinates.
/// Unused trailing slots are zero, so a monomial does not need to know how many
/// coordinates the chart has.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, other) in the sense other | *this.
  Monomial operator/(const Monomial& other) const;

  /// Same exponents, with the entry for `var` replaced by `power`.
  Monomial with(std::size_t var, std::uint32_t power) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint32_t, kMaxVariables> exp_{};
};

/// Graded lexicographic order; coordinate 0 is the most significant variable.
bool grlex_less(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted by descending
/// graded-lex order with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  explicit Polynomial(long c) : Polynomial(Rational(c)) {}

  static Polynomial variable(std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  /// Accepts terms in any order, combines like monomials, drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Throws std::logic_error unless is_constant().
  Rational constant_value() const;
  const Term& leading() const;

  std::uint32_t degree_in(std::size_t var) const;
  std::uint32_t total_degree() const;
  bool depends_on(std::size_t var) const;

  /// Coefficient of var^power, as a polynomial free of var.
  Polynomial coefficient_in(std::size_t var, std::uint32_t power) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(std::uint32_t n) const;
  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// Quotient of an exact division; throws ArithmeticError if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Rational c with a / c an integer polynomial of content 1 and positive
/// leading coefficient. Zero for the zero polynomial.
Rational rational_content(const Polynomial& a);

/// Primitive integer part: a / rational_content(a).
Polynomial primitive_part(const Polynomial& a);

/// Greatest common divisor, normalized to a primitive integer polynomial with
/// positive leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& p, std::span<const std::string> names);

}  // namespace pcv::ratcas
