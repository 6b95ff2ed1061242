/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pcv/ratcas/rational_function.hpp"

namespace pcv::ratcas {

/// Malformed expression text. offset() is the byte position of the offending
/// token (text.size() when input ended early).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar (whitespace-insensitive):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | '+' unary | power
///   power   := primary ('^' ['-' | '+'] integer)?
///   primary := integer | identifier | '(' expr ')'
///
/// Identifiers must be coordinates of `coords`. Throws ParseError (syntax,
/// unknown identifier) or ArithmeticError (division by zero).
RationalFunction parse_expr(std::string_view text, const CoordinateSystem& coords);

}  // namespace pcv::ratcas
