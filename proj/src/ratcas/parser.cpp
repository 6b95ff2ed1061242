/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/ratcas/parser.hpp"

#include <cctype>

namespace pcv::ratcas {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

// Exponents beyond this are rejected rather than expanded.
constexpr long kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, const CoordinateSystem& coords) : text_(text), coords_(coords) {}

  RationalFunction parse() {
    RationalFunction value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction divisor = unary();
        if (divisor.is_zero()) throw ArithmeticError("division by zero at offset " + std::to_string(at));
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_space();
    const std::size_t at = pos_;
    const Integer n = integer_literal();
    if (n > kMaxExponent) throw ParseError("exponent too large", at);
    const long e = n.get_si();
    if (negative && base.is_zero()) throw ArithmeticError("division by zero at offset " + std::to_string(at));
    return base.pow(negative ? -e : e);
  }

  RationalFunction primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a number, coordinate or '('");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(integer_literal()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto index = coords_.index_of(name);
      if (!index) throw ParseError("unknown identifier '" + std::string(name) + "'", start);
      return RationalFunction::variable(*index);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Integer integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      fail("floating-point literals are not allowed");
    }
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string_view text_;
  const CoordinateSystem& coords_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expr(std::string_view text, const CoordinateSystem& coords) {
  return Parser(text, coords).parse();
}

}  // namespace pcv::ratcas
