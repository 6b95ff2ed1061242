/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/ratcas/rational_function.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace pcv::ratcas {

// ---------------------------------------------------------------------------
// CoordinateSystem

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

CoordinateSystem::CoordinateSystem(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("coordinate system needs at least one coordinate");
  if (names_.size() > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " coordinates are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw std::invalid_argument("invalid coordinate name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate coordinate name '" + n + "'");
  }
}

std::optional<std::size_t> CoordinateSystem::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t CoordinateSystem::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownCoordinate("unknown coordinate '" + std::string(name) + "'");
}

std::vector<Rational> point_values(const Point& point, const CoordinateSystem& coords) {
  std::vector<Rational> values;
  values.reserve(coords.size());
  for (const auto& name : coords.names()) {
    auto it = point.find(name);
    if (it == point.end()) throw std::invalid_argument("point does not assign coordinate '" + name + "'");
    values.push_back(it->second);
  }
  for (const auto& [name, value] : point) {
    if (!coords.index_of(name)) throw UnknownCoordinate("point assigns unknown coordinate '" + name + "'");
  }
  return values;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const Rational& c) {
  Rational q = c;
  q.canonicalize();
  num_ = Polynomial(Rational(q.get_num()));
  den_ = Polynomial(Rational(q.get_den()));
}

RationalFunction RationalFunction::variable(std::size_t index) {
  return RationalFunction(Polynomial::variable(index), Polynomial(1), true);
}

RationalFunction RationalFunction::normalize_content(Polynomial num, Polynomial den) {
  if (num.is_zero()) return {};
  const Rational cn = rational_content(num);
  const Rational cd = rational_content(den);
  const Rational scale = cn / cd;
  Polynomial n = num * Rational(1 / cn);
  Polynomial d = den * Rational(1 / cd);
  n *= Rational(scale.get_num());
  d *= Rational(scale.get_den());
  return RationalFunction(std::move(n), std::move(d), true);
}

RationalFunction RationalFunction::from_polynomials(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ArithmeticError("division by the zero polynomial");
  if (num.is_zero()) return {};
  if (!den.is_constant() && !num.is_constant()) {
    const Polynomial g = gcd(num, den);
    if (!g.is_constant()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  return normalize_content(std::move(num), std::move(den));
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, true); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    *this = from_polynomials(num_ + other.num_, den_);
    return *this;
  }
  const Polynomial g = gcd(den_, other.den_);
  const Polynomial b = divide_exact(den_, g);
  const Polynomial d = divide_exact(other.den_, g);
  *this = from_polynomials(num_ * d + other.num_ * b, den_ * d);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this += -other; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  if (is_zero() || other.is_zero()) return *this = RationalFunction{};
  // Inputs are reduced, so only cross factors can cancel.
  const Polynomial g1 = gcd(num_, other.den_);
  const Polynomial g2 = gcd(other.num_, den_);
  Polynomial n = divide_exact(num_, g1) * divide_exact(other.num_, g2);
  Polynomial d = divide_exact(den_, g2) * divide_exact(other.den_, g1);
  *this = normalize_content(std::move(n), std::move(d));
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  if (other.is_zero()) throw ArithmeticError("division by the zero rational function");
  return *this *= RationalFunction(other.den_, other.num_, true);
}

RationalFunction RationalFunction::pow(long n) const {
  if (n < 0) {
    if (is_zero()) throw ArithmeticError("zero raised to a negative power");
    return RationalFunction(den_, num_, true).pow(-n);
  }
  if (n == 0) return RationalFunction(1);
  const auto k = static_cast<std::uint32_t>(n);
  return normalize_content(num_.pow(k), den_.pow(k));
}

RationalFunction RationalFunction::partial(std::size_t var) const {
  if (var >= kMaxVariables) throw UnknownCoordinate("variable index out of range");
  if (den_.is_constant()) return normalize_content(num_.derivative(var), den_);
  const Polynomial dn = num_.derivative(var);
  const Polynomial dd = den_.derivative(var);
  if (dd.is_zero()) return from_polynomials(dn, den_);
  return from_polynomials(dn * den_ - num_ * dd, den_ * den_);
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

RationalFunction partial(const RationalFunction& f, std::string_view coord, const CoordinateSystem& coords) {
  return f.partial(coords.require_index(coord));
}

Rational evaluate(const RationalFunction& f, const Point& point, const CoordinateSystem& coords) {
  const auto values = point_values(point, coords);
  return f.evaluate(values);
}

std::string to_string(const RationalFunction& f, const CoordinateSystem& coords) {
  const auto& names = coords.names();
  std::string num = to_string(f.numerator(), names);
  if (f.denominator() == Polynomial(1)) return num;
  if (f.numerator().size() > 1) num = "(" + num + ")";
  std::string den = to_string(f.denominator(), names);
  const auto& dt = f.denominator().terms();
  const bool bare = dt.size() == 1 && (dt[0].monomial.is_one() || (dt[0].coeff == 1 && [&] {
                      int vars = 0;
                      for (std::size_t i = 0; i < kMaxVariables; ++i) vars += dt[0].monomial[i] != 0;
                      return vars == 1;
                    }()));
  if (!bare) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace pcv::ratcas
