/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/analysis/solitons.hpp"

namespace pcv::analysis {

using geometry::lie_derivative;
using geometry::outer;
using structures::ClassKind;
using structures::residual_result;

std::string to_string(SignClass c) {
  switch (c) {
    case SignClass::Shrinking: return "shrinking";
    case SignClass::Steady: return "steady";
    case SignClass::Expanding: return "expanding";
  }
  return "unknown";
}

SignClass yamabe_sign(const Rational& lambda) {
  if (lambda > 0) return SignClass::Shrinking;
  if (lambda < 0) return SignClass::Expanding;
  return SignClass::Steady;
}

SignClass ricci_sign(const Rational& mu) {
  if (mu < 0) return SignClass::Shrinking;
  if (mu > 0) return SignClass::Expanding;
  return SignClass::Steady;
}

namespace {

// The constant c with t = c g, if there is one.
std::optional<Rational> constant_ratio(const Tensor02& t, const Tensor02& g) {
  const auto n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g(i, j).is_zero()) continue;
      const RationalFunction ratio = t(i, j) / g(i, j);
      if (!ratio.is_constant()) return std::nullopt;
      const Rational c = ratio.constant_value();
      if (!(t - RationalFunction(c) * g).is_zero()) return std::nullopt;
      return c;
    }
  return std::nullopt;
}

}  // namespace

SolitonReport yamabe_check(const ParacontactStructure& s, const VectorField& v, const Rational& lambda) {
  const auto& g = s.g().g();
  const RationalFunction factor = RationalFunction(lambda) - s.curvature().scalar;
  SolitonReport r{lie_derivative(g, v) - factor * g, false, lambda, yamabe_sign(lambda), std::nullopt, {}};
  r.holds = r.residual.is_zero();
  r.rho = factor * RationalFunction(Rational(1, 2));
  return r;
}

std::optional<Rational> yamabe_solve_lambda(const ParacontactStructure& s, const VectorField& v) {
  const auto& g = s.g().g();
  return constant_ratio(lie_derivative(g, v) + s.curvature().scalar * g, g);
}

GradientSolitonReport gradient_soliton_check(const ParacontactStructure& s, const RationalFunction& f,
                                             const Rational& lambda) {
  VectorField v = geometry::gradient(f, s.g());
  SolitonReport r = yamabe_check(s, v, lambda);
  return GradientSolitonReport{std::move(v), std::move(r)};
}

SolitonReport ricci_soliton_check(const ParacontactStructure& s, const VectorField& v, const Rational& mu) {
  const auto& g = s.g().g();
  const RationalFunction two(2);
  SolitonReport r{lie_derivative(g, v) + two * s.curvature().ricci + (two * RationalFunction(mu)) * g,
                  false,
                  mu,
                  ricci_sign(mu),
                  std::nullopt,
                  {}};
  r.holds = r.residual.is_zero();
  return r;
}

std::optional<Rational> ricci_solve_mu(const ParacontactStructure& s, const VectorField& v) {
  const auto& g = s.g().g();
  const auto c = constant_ratio(lie_derivative(g, v) + RationalFunction(2) * s.curvature().ricci, g);
  if (!c) return std::nullopt;
  return -*c / 2;
}

AxiomResult killing_check(const ParacontactStructure& s, const VectorField& v) {
  return residual_result("killing", "L_V g", lie_derivative(s.g().g(), v).tensor());
}

std::optional<RationalFunction> conformal_factor(const ParacontactStructure& s, const VectorField& v) {
  const auto& g = s.g().g();
  const Tensor02 lg = lie_derivative(g, v);
  const auto n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g(i, j).is_zero()) continue;
      RationalFunction rho = lg(i, j) / (RationalFunction(2) * g(i, j));
      if (!(lg - (RationalFunction(2) * rho) * g).is_zero()) return std::nullopt;
      return rho;
    }
  return std::nullopt;
}

ConformalIdentities conformal_identities_check(const ParacontactStructure& s, const VectorField& v) {
  auto rho = conformal_factor(s, v);
  if (!rho) throw AnalysisError("vector field is not conformal: L_V g is not a multiple of g");
  const auto& c = s.curvature();
  const auto& g = s.g().g();
  const RationalFunction n(static_cast<long>(s.dim()));
  const RationalFunction lap = geometry::laplacian(*rho, s.g(), c.gamma);
  const Tensor02 hess = geometry::hessian(*rho, c.gamma);
  ConformalIdentities out{*rho, lie_derivative(c.ricci, v) + (n - RationalFunction(2)) * hess - lap * g,
                          geometry::lie_derivative(c.scalar, v) + RationalFunction(2) * *rho * c.scalar -
                              RationalFunction(2) * (n - RationalFunction(1)) * lap};
  return out;
}

AxiomReport soliton_consequence_suite(const ParacontactStructure& s, const VectorField& v, const Rational& lambda) {
  if (!yamabe_check(s, v, lambda).holds) throw AnalysisError("candidate is not a Yamabe soliton");
  const auto n = s.dim();
  const auto& r = s.curvature().scalar;
  const RationalFunction lam(lambda);
  const RationalFunction half(Rational(1, 2));
  AxiomReport out;
  const VectorField lv_xi = geometry::lie_bracket(v, s.xi());
  out.items.push_back(residual_result("eta_lie_xi", "eta(L_V xi) - (r - lambda)/2",
                                      geometry::apply(s.eta(), lv_xi) - (r - lam) * half, n));
  const OneForm lv_eta = lie_derivative(s.eta(), v);
  out.items.push_back(residual_result("lie_eta_xi", "(L_V eta)(xi) - (lambda - r)/2",
                                      geometry::apply(lv_eta, s.xi()) - (lam - r) * half, n));

  const auto kind = structures::classify(s).verdict.kind;
  const RationalFunction lap_r = geometry::laplacian(r, s.g(), s.curvature().gamma);
  switch (kind) {
    case ClassKind::ParaSasakian:
      out.items.push_back(
          residual_result("laplacian_r", "Delta r + 4(r - lambda)", lap_r + RationalFunction(4) * (r - lam), n));
      break;
    case ClassKind::Paracosymplectic:
      out.items.push_back(residual_result("harmonic_r", "Delta r", lap_r, n));
      break;
    case ClassKind::ParaKenmotsu:
      out.items.push_back(residual_result("lambda_kenmotsu", "lambda + 6", lam + RationalFunction(6), n));
      break;
    default:
      break;
  }
  return out;
}

AxiomReport automorphism_check(const ParacontactStructure& s, const VectorField& v) {
  AxiomReport out;
  out.items.push_back(residual_result("lie_eta", "L_V eta", lie_derivative(s.eta(), v).tensor()));
  out.items.push_back(residual_result("lie_xi", "L_V xi", lie_derivative(s.xi(), v).tensor()));
  out.items.push_back(
      residual_result("lie_phi_form", "L_V Phi", lie_derivative(structures::fundamental_two_form(s), v).tensor()));
  out.items.push_back(residual_result("lie_g", "L_V g", lie_derivative(s.g().g(), v).tensor()));
  return out;
}

CollinearResidual collinear_residual(const ParacontactStructure& s, const RationalFunction& b) {
  const auto kind = structures::classify(s).verdict.kind;
  if (kind != ClassKind::ParaSasakian && kind != ClassKind::ParaKenmotsu) {
    throw AnalysisError("collinear residual needs a para-Sasakian or para-Kenmotsu structure");
  }
  const auto& g = s.g().g();
  const auto n = s.dim();
  VectorField bxi = s.xi();
  bxi *= b;
  if (b.is_zero()) bxi = VectorField(n);

  const OneForm db = geometry::differential(b, n);
  Tensor02 closed = outer(db, s.eta()) + outer(s.eta(), db);
  if (kind == ClassKind::ParaKenmotsu) closed += (RationalFunction(2) * b) * (g - outer(s.eta(), s.eta()));

  CollinearResidual out{lie_derivative(g, bxi), std::move(closed), false};
  out.agree = out.direct == out.closed_form;
  return out;
}

}  // namespace pcv::analysis
