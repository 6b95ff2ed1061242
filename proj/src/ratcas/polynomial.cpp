/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/ratcas/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

namespace pcv::ratcas {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  if (index >= kMaxVariables) throw std::out_of_range("variable index exceeds kMaxVariables");
  Monomial m;
  m.exp_[index] = power;
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exp_) d += e;
  return static_cast<std::uint32_t>(d);
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const std::uint64_t e = std::uint64_t{exp_[i]} + other.exp_[i];
    if (e > std::numeric_limits<std::uint32_t>::max()) throw ArithmeticError("exponent overflow");
    r.exp_[i] = static_cast<std::uint32_t>(e);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (other.exp_[i] > exp_[i]) throw ArithmeticError("monomial division is not exact");
    r.exp_[i] = exp_[i] - other.exp_[i];
  }
  return r;
}

Monomial Monomial::with(std::size_t var, std::uint32_t power) const {
  Monomial r = *this;
  r.exp_[var] = power;
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool term_before(const Term& a, const Term& b) { return grlex_less(b.monomial, a.monomial); }

// Merge of two sorted term lists, b scaled by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_before(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_before(b[j], a[i])) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = sign < 0 ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial times_term(const Polynomial& p, const Term& t) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& s : p.terms()) out.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
  // Multiplication by a monomial preserves a monomial order.
  return Polynomial::from_terms(std::move(out));
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, c});
}

Polynomial Polynomial::variable(std::size_t index) { return monomial(Monomial::variable(index), Rational(1)); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

std::uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

bool Polynomial::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.monomial[var] != 0; });
}

Polynomial Polynomial::coefficient_in(std::size_t var, std::uint32_t power) const {
  Polynomial p;
  for (const auto& t : terms_) {
    if (t.monomial[var] == power) p.terms_.push_back(Term{t.monomial.with(var, 0), t.coeff});
  }
  // Zeroing one exponent can reorder terms.
  return from_terms(std::move(p.terms_));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return times_term(b, a.terms_[0]);
  if (b.size() == 1) return times_term(a, b.terms_[0]);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::pow(std::uint32_t n) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.monomial[var];
    if (e == 0) continue;
    out.push_back(Term{t.monomial.with(var, e - 1), t.coeff * e});
  }
  return from_terms(std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      if (i >= point.size()) throw std::out_of_range("evaluation point has too few coordinates");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
      v *= p;
    }
    sum += v;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Division and gcd

namespace {

std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  const Term& lead = b.leading();
  std::vector<Term> quotient;
  Polynomial rest = a;
  while (!rest.is_zero()) {
    const Term& top = rest.leading();
    if (!lead.monomial.divides(top.monomial)) return std::nullopt;
    Term q{top.monomial / lead.monomial, top.coeff / lead.coeff};
    rest -= times_term(b, q);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(std::move(quotient));
}

}  // namespace

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero polynomial");
  auto q = try_divide(a, b);
  if (!q) throw ArithmeticError("polynomial division is not exact");
  return std::move(*q);
}

Rational rational_content(const Polynomial& a) {
  if (a.is_zero()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : a.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (a.leading().coeff < 0) c = -c;
  return c;
}

Polynomial primitive_part(const Polynomial& a) {
  if (a.is_zero()) return a;
  const Rational c = rational_content(a);
  if (c == 1) return a;
  return a * Rational(1 / c);
}

namespace {

Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of p viewed as a polynomial in `var`.
Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g;
  const auto deg = p.degree_in(var);
  for (std::uint32_t d = 0; d <= deg; ++d) {
    Polynomial c = p.coefficient_in(var, d);
    if (c.is_zero()) continue;
    g = g.is_zero() ? primitive_part(c) : gcd_primitive(g, primitive_part(c));
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial primitive_in(const Polynomial& p, std::size_t var) {
  return primitive_part(divide_exact(p, content_in(p, var)));
}

// Sparse pseudo-remainder of a by b with respect to `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const auto deg_b = b.degree_in(var);
  const Polynomial lead_b = b.coefficient_in(var, deg_b);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= deg_b) {
    const auto deg_r = r.degree_in(var);
    const Polynomial lead_r = r.coefficient_in(var, deg_r);
    const Polynomial shift = Polynomial::monomial(Monomial::variable(var, deg_r - deg_b), Rational(1));
    r = lead_b * r - lead_r * shift * b;
  }
  return r;
}

// Both arguments nonzero, primitive, integer coefficients.
Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return a;
  std::size_t var = 0;
  while (var < kMaxVariables && !a.depends_on(var) && !b.depends_on(var)) ++var;
  const bool in_a = a.depends_on(var);
  const bool in_b = b.depends_on(var);
  if (!in_a) return gcd_primitive(a, content_in(b, var));
  if (!in_b) return gcd_primitive(content_in(a, var), b);

  const Polynomial ca = content_in(a, var);
  const Polynomial cb = content_in(b, var);
  Polynomial pa = divide_exact(a, ca);
  Polynomial pb = divide_exact(b, cb);
  const Polynomial c = gcd_primitive(ca, cb);

  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    pa = std::move(pb);
    pb = r.is_zero() ? std::move(r) : primitive_in(r, var);
  }
  return primitive_part(c * primitive_in(pa, var));
}

}  // namespace

namespace {

// Heuristic gcd: evaluate one variable at a large integer, recurse, and read
// the gcd back from its balanced xi-adic digits. Inputs have integer
// coefficients. Returns std::nullopt when every evaluation point was unlucky.
constexpr int kHeuristicAttempts = 6;

Integer max_norm(const Polynomial& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) {
    const Integer c = abs(t.coeff.get_num());
    if (c > m) m = c;
  }
  return m;
}

Integer integer_content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

Polynomial substitute(const Polynomial& p, std::size_t var, const Integer& value) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), value.get_mpz_t(), t.monomial[var]);
    out.push_back(Term{t.monomial.with(var, 0), t.coeff * Rational(scale)});
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial interpolate(Polynomial h, std::size_t var, const Integer& xi) {
  std::vector<Term> out;
  const Integer half = xi / 2;
  const Rational inv = Rational(1) / Rational(xi);
  for (std::uint32_t power = 0; !h.is_zero(); ++power) {
    std::vector<Term> digit;
    for (const auto& t : h.terms()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit.push_back(Term{t.monomial, Rational(r)});
    }
    const Polynomial g = Polynomial::from_terms(digit);
    for (const auto& t : digit) out.push_back(Term{t.monomial.with(var, power), t.coeff});
    h = (h - g) * inv;
  }
  return Polynomial::from_terms(std::move(out));
}

std::optional<Polynomial> heuristic_gcd(Polynomial f, Polynomial g) {
  const Integer cf = integer_content(f);
  const Integer cg = integer_content(g);
  Integer common;
  mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (f.is_constant() || g.is_constant()) return Polynomial(Rational(common));
  f *= Rational(Integer(1), cf);
  g *= Rational(Integer(1), cg);

  std::size_t var = 0;
  while (!f.depends_on(var) && !g.depends_on(var)) ++var;

  const Integer fn = max_norm(f);
  const Integer gn = max_norm(g);
  const Integer min_norm = fn < gn ? fn : gn;
  const Integer lead_bound = std::min(Integer(fn / abs(f.leading().coeff.get_num())),
                                      Integer(gn / abs(g.leading().coeff.get_num())));
  Integer xi = 2 * min_norm + 29;
  if (2 * lead_bound + 2 > xi) xi = 2 * lead_bound + 2;

  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    const Polynomial ff = substitute(f, var, xi);
    const Polynomial gg = substitute(g, var, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto h = heuristic_gcd(ff, gg);
      if (!h) return std::nullopt;
      Polynomial cand = interpolate(std::move(*h), var, xi);
      if (!cand.is_zero()) {
        cand *= Rational(Integer(1), integer_content(cand));
        if (try_divide(f, cand) && try_divide(g, cand)) return cand * Rational(common);
      }
    }
    Integer root;
    mpz_sqrt(root.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());
    xi = 73794 * xi * root / 27011;
  }
  return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  const Polynomial pa = primitive_part(a);
  const Polynomial pb = primitive_part(b);
  if (pa.is_constant() || pb.is_constant()) return Polynomial(1);
  if (auto h = heuristic_gcd(pa, pb)) return primitive_part(*h);
  return gcd_primitive(pa, pb);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string monomial_string(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const auto e = m[i];
    if (e == 0) continue;
    if (i >= names.size()) throw std::out_of_range("no name for variable index " + std::to_string(i));
    if (!out.empty()) out += '*';
    out += names[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    const Rational mag = abs(t.coeff);
    std::string body;
    if (t.monomial.is_one()) {
      body = to_string(mag);
    } else if (mag == 1) {
      body = monomial_string(t.monomial, names);
    } else {
      body = to_string(mag) + '*' + monomial_string(t.monomial, names);
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace pcv::ratcas
