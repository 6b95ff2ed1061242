/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "doctest.h"

#include "pcv/analysis/curvature_checks.hpp"
#include "pcv/analysis/solitons.hpp"
#include "support/random_expr.hpp"
#include "support/structure_models.hpp"

using namespace pcv::analysis;
using namespace pcv::testing;
using pcv::geometry::outer;
using pcv::geometry::Tensor13;
using pcv::structures::ClassKind;

namespace {

VectorField euler() { return vec({"x", "y", "z"}); }
VectorField zero_field() { return VectorField(3); }

bool all_zero(const AxiomReport& r) { return r.all_hold(); }

// diag(1, -1, 1)/z^2 carrying the flat tensors; only the metric matters here.
ParacontactStructure conformally_flat() {
  const auto m = flat();
  return ParacontactStructure(xyz(), m.phi, m.xi, m.eta, Tensor02(3, entries({"1/z^2", "0", "0", "0", "-1/z^2", "0", "0", "0", "1/z^2"})),
                              {0, 0, 1});
}

}  // namespace

TEST_CASE("sign classes") {
  CHECK(yamabe_sign(Rational(2)) == SignClass::Shrinking);
  CHECK(yamabe_sign(Rational(0)) == SignClass::Steady);
  CHECK(yamabe_sign(Rational(-6)) == SignClass::Expanding);
  CHECK(ricci_sign(Rational(2)) == SignClass::Expanding);
  CHECK(ricci_sign(Rational(-1)) == SignClass::Shrinking);
  CHECK(ricci_sign(Rational(0)) == SignClass::Steady);
  CHECK(to_string(SignClass::Expanding) == "expanding");
}

TEST_CASE("yamabe check") {
  const auto e2 = yamabe_check(ex2_structure(), zero_field(), Rational(-6));
  CHECK(e2.holds);
  CHECK(e2.sign == SignClass::Expanding);
  CHECK(*e2.rho == RationalFunction(0));

  const auto e1 = yamabe_check(ex1_structure(), ex1().xi, Rational(2));
  CHECK(e1.holds);
  CHECK(e1.sign == SignClass::Shrinking);

  const auto fl = flat_structure();
  const auto bad = yamabe_check(fl, zero_field(), Rational(1));
  CHECK_FALSE(bad.holds);
  CHECK(bad.residual == -fl.g().g());
  CHECK(*bad.rho == RationalFunction(Rational(1, 2)));
}

TEST_CASE("yamabe lambda solver") {
  CHECK(yamabe_solve_lambda(ex1_structure(), ex1().xi) == Rational(2));
  CHECK(yamabe_solve_lambda(flat_structure(), euler()) == Rational(2));
  CHECK_FALSE(yamabe_solve_lambda(flat_structure(), vec({"x^2", "0", "0"})).has_value());
  CHECK(yamabe_solve_lambda(ex2_structure(), zero_field()) == Rational(-6));
}

TEST_CASE("gradient soliton") {
  const auto fl = flat_structure();
  const auto g = gradient_soliton_check(fl, expr("(x^2 - y^2 + z^2)/2"), Rational(2));
  CHECK(g.v == euler());
  CHECK(g.soliton.holds);

  const auto zero = gradient_soliton_check(fl, RationalFunction(0), Rational(0));
  CHECK(zero.v.is_zero());
  CHECK(zero.soliton.holds);

  const auto e1 = gradient_soliton_check(ex1_structure(), RationalFunction(0), Rational(5));
  CHECK_FALSE(e1.soliton.holds);
  CHECK(e1.soliton.residual == RationalFunction(-3) * ex1_structure().g().g());
}

TEST_CASE("ricci soliton") {
  CHECK(ricci_solve_mu(ex2_structure(), zero_field()) == Rational(2));
  const auto r2 = ricci_soliton_check(ex2_structure(), zero_field(), Rational(2));
  CHECK(r2.holds);
  CHECK(r2.sign == SignClass::Expanding);

  CHECK(ricci_solve_mu(flat_structure(), zero_field()) == Rational(0));
  CHECK(ricci_soliton_check(flat_structure(), zero_field(), Rational(0)).sign == SignClass::Steady);

  CHECK_FALSE(ricci_solve_mu(ex1_structure(), ex1().xi).has_value());
  CHECK_FALSE(ricci_soliton_check(ex1_structure(), ex1().xi, Rational(-1)).holds);
}

TEST_CASE("killing fields") {
  CHECK(killing_check(ex1_structure(), ex1().xi).holds);
  CHECK(killing_check(flat_structure(), vec({"1", "0", "0"})).holds);
  const auto r = killing_check(flat_structure(), vec({"x", "0", "0"}));
  CHECK_FALSE(r.holds);
  CHECK(*r.residual == Tensor02(3, entries({"2", "0", "0", "0", "0", "0", "0", "0", "0"})).tensor());
  // xi is not Killing on the para-Kenmotsu example.
  CHECK_FALSE(killing_check(ex2_structure(), ex2().xi).holds);
}

TEST_CASE("conformal factor and identities") {
  const auto fl = flat_structure();
  const auto c = conformal_identities_check(fl, euler());
  CHECK(c.rho == RationalFunction(1));
  CHECK(c.ricci_residual.is_zero());
  CHECK(c.scalar_residual.is_zero());

  const auto e1 = conformal_identities_check(ex1_structure(), ex1().xi);
  CHECK(e1.rho.is_zero());
  CHECK(e1.ricci_residual.is_zero());
  CHECK(e1.scalar_residual.is_zero());

  CHECK_THROWS_AS(conformal_identities_check(fl, vec({"x^2", "0", "0"})), AnalysisError);
  CHECK_FALSE(conformal_factor(fl, vec({"x^2", "0", "0"})).has_value());
}

TEST_CASE("conformal identities with a non-constant factor") {
  const auto s = conformally_flat();
  CHECK(s.curvature().scalar == RationalFunction(-6));
  const auto c = conformal_identities_check(s, vec({"0", "0", "1"}));
  CHECK(c.rho == expr("-1/z"));
  CHECK(pcv::geometry::laplacian(c.rho, s.g(), s.curvature().gamma) == expr("3/z"));
  CHECK(c.ricci_residual.is_zero());
  CHECK(c.scalar_residual.is_zero());
}

TEST_CASE("soliton consequences") {
  const auto e1 = soliton_consequence_suite(ex1_structure(), ex1().xi, Rational(2));
  CHECK(e1.items.size() == 3);
  CHECK(e1.find("laplacian_r") != nullptr);
  CHECK(all_zero(e1));

  const auto e2 = soliton_consequence_suite(ex2_structure(), zero_field(), Rational(-6));
  CHECK(e2.find("lambda_kenmotsu") != nullptr);
  CHECK(all_zero(e2));

  const auto fl = soliton_consequence_suite(flat_structure(), zero_field(), Rational(0));
  CHECK(fl.find("harmonic_r") != nullptr);
  CHECK(all_zero(fl));

  CHECK_THROWS_AS(soliton_consequence_suite(ex1_structure(), ex1().xi, Rational(3)), AnalysisError);
}

TEST_CASE("automorphisms") {
  CHECK(automorphism_check(ex1_structure(), ex1().xi).all_hold());
  CHECK(automorphism_check(flat_structure(), vec({"1", "0", "0"})).all_hold());
  const auto r = automorphism_check(flat_structure(), vec({"x", "0", "0"}));
  CHECK_FALSE(r.find("lie_g")->holds);
  CHECK_FALSE(r.all_hold());
}

TEST_CASE("xi derivative of the scalar curvature") {
  CHECK(xi_scalar_derivative_check(ex1_structure()).holds);
  CHECK(xi_scalar_derivative_check(ex2_structure()).holds);
  CHECK(xi_scalar_derivative_check(flat_structure()).holds);
  CHECK(xi_scalar_derivative_check(ex2_structure()).formula == "xi(r) + 2(r + 6)");
  CHECK_THROWS_AS(xi_scalar_derivative_check(conformally_flat()), AnalysisError);
}

TEST_CASE("ricci closed forms") {
  CHECK(ricci_closed_form_check(ex1_structure()).holds);
  CHECK(ricci_closed_form_check(ex2_structure()).holds);
  CHECK(ricci_closed_form_check(flat_structure()).holds);
}

TEST_CASE("einstein classification") {
  const auto e2 = einstein_classify(ex2_structure());
  CHECK(e2.verdict == EinsteinVerdict::Einstein);
  CHECK(*e2.alpha == RationalFunction(-2));
  CHECK(e2.beta->is_zero());

  const auto e1 = einstein_classify(ex1_structure());
  CHECK(e1.verdict == EinsteinVerdict::ProperEtaEinstein);
  CHECK(*e1.alpha == RationalFunction(2));
  CHECK(*e1.beta == RationalFunction(-4));

  const auto fl = einstein_classify(flat_structure());
  CHECK(fl.verdict == EinsteinVerdict::RicciFlat);
  CHECK(fl.residual.is_zero());

  // Q = -2 I on the conformally flat metric, with xi no longer unit.
  const auto cf = einstein_classify(conformally_flat());
  CHECK(cf.verdict == EinsteinVerdict::Einstein);
  CHECK(*cf.alpha == RationalFunction(-2));
  CHECK(to_string(EinsteinVerdict::ProperEtaEinstein) == "proper eta-Einstein");
}

TEST_CASE("constant curvature") {
  CHECK(constant_curvature_solve(ex2_structure()).c == Rational(-1));
  CHECK(constant_curvature_solve(flat_structure()).c == Rational(0));
  const auto e1 = constant_curvature_solve(ex1_structure());
  CHECK_FALSE(e1.c.has_value());
  CHECK(constant_curvature_solve(conformally_flat()).c == Rational(-1));
}

TEST_CASE("collinear fields") {
  const auto e1 = collinear_residual(ex1_structure(), RationalFunction(1));
  CHECK(e1.agree);
  CHECK(e1.direct.is_zero());

  const auto s2 = ex2_structure();
  const auto e2 = collinear_residual(s2, RationalFunction(1));
  CHECK(e2.agree);
  CHECK(e2.direct == RationalFunction(2) * (s2.g().g() - outer(s2.eta(), s2.eta())));
  CHECK_FALSE(e2.direct.is_zero());

  const auto z = collinear_residual(ex1_structure(), expr("z"));
  CHECK(z.agree);
  CHECK(z.direct == Tensor02(3, entries({"0", "0", "1", "0", "0", "0", "1", "0", "-4*y/z"})));

  CHECK_THROWS_AS(collinear_residual(flat_structure(), RationalFunction(1)), AnalysisError);
}

TEST_CASE("dimension three curvature identity") {
  CHECK(dim3_curvature_identity_check(flat_structure()).holds);
  CHECK(dim3_curvature_identity_check(ex1_structure()).holds);
  CHECK(dim3_curvature_identity_check(ex2_structure()).holds);
  CHECK(dim3_curvature_identity_check(conformally_flat()).holds);
}

TEST_CASE("engine self tests") {
  for (const auto& s : {ex1_structure(), ex2_structure(), flat_structure(), conformally_flat()}) {
    const auto r = engine_self_tests(s, vec({"x*y", "z", "x - y^2"}));
    for (const auto& item : r.items) {
      INFO(item.name);
      CHECK(item.holds);
    }
  }
}

// ---------------------------------------------------------------------------
// Properties.

TEST_CASE("yamabe solver round trip") {
  for (const auto& s : {ex1_structure(), ex2_structure(), flat_structure()}) {
    for (const auto& v : {zero_field(), s.xi(), euler(), vec({"1", "0", "0"})}) {
      const auto lambda = yamabe_solve_lambda(s, v);
      if (!lambda) continue;
      CHECK(yamabe_check(s, v, *lambda).holds);
    }
  }
  ExprGen gen(11);
  const auto fl = flat_structure();
  for (int i = 0; i < 20; ++i) {
    const Rational lambda = gen.rational();
    const auto v = RationalFunction(Rational(lambda / 2)) * euler();
    REQUIRE(yamabe_check(fl, v, lambda).holds);
    CHECK(yamabe_solve_lambda(fl, v) == lambda);
  }
}

TEST_CASE("killing fields satisfy the conformal identities with zero factor") {
  const std::vector<std::pair<ParacontactStructure, VectorField>> cases = {
      {ex1_structure(), ex1().xi},
      {flat_structure(), vec({"1", "0", "0"})},
      {flat_structure(), vec({"y", "x", "0"})},
      {flat_structure(), vec({"z", "0", "-x"})},
      {ex2_structure(), zero_field()},
  };
  for (const auto& [s, v] : cases) {
    REQUIRE(killing_check(s, v).holds);
    const auto c = conformal_identities_check(s, v);
    CHECK(c.rho.is_zero());
    CHECK(c.ricci_residual.is_zero());
    CHECK(c.scalar_residual.is_zero());
  }
}

TEST_CASE("einstein coefficients agree with the class closed forms") {
  for (const auto& s : {ex1_structure(), ex2_structure(), flat_structure()}) {
    REQUIRE(ricci_closed_form_check(s).holds);
    const auto kind = pcv::structures::classify(s).verdict.kind;
    const auto half_r = s.curvature().scalar * RationalFunction(Rational(1, 2));
    const auto e = einstein_classify(s);
    REQUIRE(e.alpha.has_value());
    if (kind == ClassKind::Paracosymplectic) {
      CHECK(*e.alpha == half_r);
      CHECK(*e.beta == -half_r);
    } else {
      CHECK(*e.alpha == half_r + RationalFunction(1));
      CHECK(*e.beta == -(half_r + RationalFunction(3)));
    }
  }
}

TEST_CASE("constant curvature c gives Einstein with alpha = 2c") {
  for (const auto& s : {ex2_structure(), flat_structure(), conformally_flat()}) {
    const auto c = constant_curvature_solve(s).c;
    REQUIRE(c.has_value());
    const auto e = einstein_classify(s);
    CHECK(e.verdict != EinsteinVerdict::ProperEtaEinstein);
    CHECK(*e.alpha == RationalFunction(Rational(2 * *c)));
  }
}

TEST_CASE("collinear paths agree for random b") {
  ExprGen gen(2026);
  for (const auto& s : {ex1_structure(), ex2_structure()}) {
    for (int i = 0; i < 20; ++i) {
      const auto b = expr(gen.polynomial(3, 2));
      const auto r = collinear_residual(s, b);
      INFO(to_string(b, xyz()));
      CHECK(r.agree);
    }
  }
}

TEST_CASE("verified solitons on the fixtures are Killing or Ricci solitons") {
  // A verified soliton (xi, 2) on the para-Sasakian example: V is Killing and r is constant.
  const auto s1 = ex1_structure();
  REQUIRE(yamabe_check(s1, s1.xi(), Rational(2)).holds);
  CHECK(killing_check(s1, s1.xi()).holds);
  CHECK(s1.curvature().scalar.is_constant());

  // Yamabe soliton with r = -6 is also a Ricci soliton with mu = 2.
  const auto s2 = ex2_structure();
  REQUIRE(yamabe_check(s2, zero_field(), Rational(-6)).holds);
  REQUIRE(s2.curvature().scalar == RationalFunction(-6));
  CHECK(ricci_solve_mu(s2, zero_field()) == Rational(2));
}
