/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcv/ratcas/polynomial.hpp"
#include "pcv/ratcas/rational.hpp"

namespace pcv::ratcas {

class UnknownCoordinate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Denominator vanishes at the requested point.
class PoleError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// Ordered, distinct coordinate names. Component index i of every tensor
/// refers to names()[i].
class CoordinateSystem {
 public:
  explicit CoordinateSystem(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& operator[](std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownCoordinate.
  std::size_t require_index(std::string_view name) const;

  friend bool operator==(const CoordinateSystem&, const CoordinateSystem&) = default;

 private:
  std::vector<std::string> names_;
};

using Point = std::map<std::string, Rational, std::less<>>;

/// Orders point values by coordinate index; throws std::invalid_argument when a
/// coordinate is missing or an extra name is present.
std::vector<Rational> point_values(const Point& point, const CoordinateSystem& coords);

/// Quotient of polynomials over Q in canonical form:
///   * gcd(num, den) = 1 as polynomials,
///   * num and den have integer coefficients with no common integer factor,
///   * the graded-lex leading coefficient of den is positive,
///   * zero is 0/1.
/// Two values are mathematically equal exactly when they compare equal.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(int c) : RationalFunction(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static RationalFunction variable(std::size_t index);
  /// Throws ArithmeticError when den is the zero polynomial.
  static RationalFunction from_polynomials(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when numerator and denominator both have degree zero.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  /// Negative powers invert; 0^n for n < 0 throws ArithmeticError.
  RationalFunction pow(long n) const;
  RationalFunction partial(std::size_t var) const;
  /// Throws PoleError if the denominator vanishes at `point`.
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  RationalFunction(Polynomial num, Polynomial den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  static RationalFunction normalize_content(Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_;
};

RationalFunction partial(const RationalFunction& f, std::string_view coord, const CoordinateSystem& coords);
Rational evaluate(const RationalFunction& f, const Point& point, const CoordinateSystem& coords);

/// Canonical text: `num/den` with explicit `*` and `^`, graded-lex term order,
/// integer coefficients. parse_expr(to_string(f)) == f.
std::string to_string(const RationalFunction& f, const CoordinateSystem& coords);

}  // namespace pcv::ratcas
