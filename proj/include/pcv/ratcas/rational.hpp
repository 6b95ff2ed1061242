/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcv::ratcas {

using Integer = mpz_class;
/// Exact rational; mpq_class keeps gcd(num, den) = 1 and den > 0 after every operation.
using Rational = mpq_class;

/// Parses `3`, `-1/2`, `+7`. No decimal point, no exponent.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace pcv::ratcas
