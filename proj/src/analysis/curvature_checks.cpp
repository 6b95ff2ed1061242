/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/analysis/curvature_checks.hpp"

namespace pcv::analysis {

using geometry::outer;
using structures::ClassKind;
using structures::residual_result;

namespace {

ClassKind require_main_class(const ParacontactStructure& s) {
  const auto kind = structures::classify(s).verdict.kind;
  if (kind != ClassKind::ParaSasakian && kind != ClassKind::Paracosymplectic && kind != ClassKind::ParaKenmotsu) {
    throw AnalysisError("check needs a para-Sasakian, paracosymplectic or para-Kenmotsu structure, got " +
                        structures::to_string(kind));
  }
  return kind;
}

RationalFunction delta(std::size_t a, std::size_t b) { return RationalFunction(a == b ? 1 : 0); }

}  // namespace

AxiomResult xi_scalar_derivative_check(const ParacontactStructure& s) {
  const auto kind = require_main_class(s);
  const auto& r = s.curvature().scalar;
  const RationalFunction xr = geometry::directional(s.xi(), r);
  if (kind == ClassKind::ParaKenmotsu) {
    return residual_result("xi_r", "xi(r) + 2(r + 6)", xr + RationalFunction(2) * (r + RationalFunction(6)), s.dim());
  }
  return residual_result("xi_r", "xi(r)", xr, s.dim());
}

AxiomResult ricci_closed_form_check(const ParacontactStructure& s) {
  const auto kind = require_main_class(s);
  const auto& c = s.curvature();
  const auto& g = s.g().g();
  const RationalFunction half_r = c.scalar * RationalFunction(Rational(1, 2));
  const Tensor02 ee = outer(s.eta(), s.eta());
  switch (kind) {
    case ClassKind::ParaSasakian:
      return residual_result("ricci_form", "S - (r/2 + 1) g + (r/2 + 3) eta (x) eta",
                             (c.ricci - (half_r + RationalFunction(1)) * g + (half_r + RationalFunction(3)) * ee).tensor());
    case ClassKind::Paracosymplectic:
      return residual_result("ricci_form", "S - (r/2)(g - eta (x) eta)", (c.ricci - half_r * (g - ee)).tensor());
    default: {
      const Tensor11 expected = (half_r + RationalFunction(1)) * geometry::identity(s.dim()) -
                                (half_r + RationalFunction(3)) * outer(s.eta(), s.xi());
      return residual_result("ricci_form", "QX - (r/2 + 1) X + (r/2 + 3) eta(X) xi",
                             (c.ricci_operator - expected).tensor());
    }
  }
}

std::string to_string(EinsteinVerdict v) {
  switch (v) {
    case EinsteinVerdict::Einstein: return "Einstein";
    case EinsteinVerdict::ProperEtaEinstein: return "proper eta-Einstein";
    case EinsteinVerdict::RicciFlat: return "Ricci-flat";
    case EinsteinVerdict::None: return "none";
  }
  return "unknown";
}

EinsteinReport einstein_classify(const ParacontactStructure& s) {
  const auto n = s.dim();
  const Tensor11& q = s.curvature().ricci_operator;
  // trace Q = n alpha + beta and eta(Q xi) = alpha + beta, using eta(xi) = 1.
  const RationalFunction q_xi = geometry::apply(s.eta(), geometry::apply(q, s.xi()));
  const RationalFunction alpha = (geometry::trace(q) - q_xi) / RationalFunction(static_cast<long>(n) - 1);
  const RationalFunction beta = q_xi - alpha;

  EinsteinReport out{std::nullopt, std::nullopt, EinsteinVerdict::None,
                     q - alpha * geometry::identity(n) - beta * outer(s.eta(), s.xi())};
  if (!out.residual.is_zero()) return out;
  out.alpha = alpha;
  out.beta = beta;
  if (alpha.is_zero() && beta.is_zero()) {
    out.verdict = EinsteinVerdict::RicciFlat;
  } else if (beta.is_zero()) {
    out.verdict = alpha.is_constant() ? EinsteinVerdict::Einstein : EinsteinVerdict::None;
  } else {
    out.verdict = EinsteinVerdict::ProperEtaEinstein;
  }
  return out;
}

ConstantCurvatureReport constant_curvature_solve(const ParacontactStructure& s) {
  const auto n = s.dim();
  const auto& g = s.g().g();
  const auto& rm = s.curvature().riemann;
  // base(l, i, j, k) = (g(d_j, d_k) d_i - g(d_i, d_k) d_j)^l
  geometry::Tensor13 base(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) base(l, i, j, k) = g(j, k) * delta(l, i) - g(i, k) * delta(l, j);

  ConstantCurvatureReport out;
  for (std::size_t f = 0; f < base.components().size(); ++f) {
    const auto& b = base.components()[f];
    if (b.is_zero()) continue;
    const RationalFunction ratio = rm.components()[f] / b;
    if (!ratio.is_constant()) return out;
    const Rational c = ratio.constant_value();
    out.residual = rm - RationalFunction(c) * base;
    if (out.residual->is_zero()) out.c = c;
    return out;
  }
  return out;
}

geometry::Tensor13 dim3_curvature_identity_residual(const ParacontactStructure& s) {
  if (s.dim() != 3) throw AnalysisError("the curvature identity is specific to dimension 3");
  const auto n = s.dim();
  const auto& c = s.curvature();
  const auto& g = s.g().g();
  const RationalFunction half_r = c.scalar * RationalFunction(Rational(1, 2));
  geometry::Tensor13 t = c.riemann;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          RationalFunction e = g(j, k) * c.ricci_operator(l, i) - g(i, k) * c.ricci_operator(l, j) +
                               c.ricci(j, k) * delta(l, i) - c.ricci(i, k) * delta(l, j) -
                               half_r * (g(j, k) * delta(l, i) - g(i, k) * delta(l, j));
          if (!e.is_zero()) t(l, i, j, k) -= e;
        }
  return t;
}

AxiomResult dim3_curvature_identity_check(const ParacontactStructure& s) {
  return residual_result("dim3_curvature", "R(X, Y) Z - g(Y, Z) QX + g(X, Z) QY - S(Y, Z) X + S(X, Z) Y + (r/2)(g(Y, Z) X - g(X, Z) Y)",
                         dim3_curvature_identity_residual(s).tensor());
}

AxiomReport engine_self_tests(const ParacontactStructure& s, const VectorField& v) {
  const auto n = s.dim();
  const auto& c = s.curvature();
  const auto& g = s.g();
  AxiomReport out;

  geometry::Tensor13 anti(n);
  geometry::Tensor13 bianchi(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          anti(l, i, j, k) = c.riemann(l, i, j, k) + c.riemann(l, j, i, k);
          bianchi(l, i, j, k) = c.riemann(l, i, j, k) + c.riemann(l, j, k, i) + c.riemann(l, k, i, j);
        }
  out.items.push_back(residual_result("riemann_antisymmetry", "R(X, Y) + R(Y, X)", anti.tensor()));
  out.items.push_back(residual_result("first_bianchi", "R(X, Y) Z + R(Y, Z) X + R(Z, X) Y", bianchi.tensor()));

  const auto rm = geometry::lower_riemann(c.riemann, g);
  geometry::Tensor04 pair(n);
  geometry::Tensor04 last(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t w = 0; w < n; ++w) {
          pair(i, j, k, w) = rm(i, j, k, w) - rm(k, w, i, j);
          last(i, j, k, w) = rm(i, j, k, w) + rm(i, j, w, k);
        }
  out.items.push_back(residual_result("pair_symmetry", "Rm(X, Y, Z, W) - Rm(Z, W, X, Y)", pair.tensor()));
  out.items.push_back(residual_result("second_pair_antisymmetry", "Rm(X, Y, Z, W) + Rm(X, Y, W, Z)", last.tensor()));
  out.items.push_back(residual_result("metricity", "nabla g", geometry::covariant_derivative(g.g(), c.gamma).tensor()));

  // trace{Y -> (nabla_Y Q) X} - X(r)/2; (nabla Q)(a, y, x) = ((nabla_{d_y} Q) d_x)^a.
  const auto nq = geometry::covariant_derivative(c.ricci_operator, c.gamma);
  OneForm cb(n);
  for (std::size_t x = 0; x < n; ++x) {
    RationalFunction t;
    for (std::size_t a = 0; a < n; ++a) t += nq(a, a, x);
    cb(x) = t - c.scalar.partial(x) * RationalFunction(Rational(1, 2));
  }
  out.items.push_back(residual_result("contracted_bianchi", "trace{Y -> (nabla_Y Q) X} - X(r)/2", cb.tensor()));

  const auto nv = geometry::covariant_derivative(v, c.gamma);
  Tensor02 killing = geometry::lie_derivative(g.g(), v);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a) {
        if (!nv(a, i).is_zero()) killing(i, j) -= g.g()(a, j) * nv(a, i);
        if (!nv(a, j).is_zero()) killing(i, j) -= g.g()(i, a) * nv(a, j);
      }
  out.items.push_back(residual_result("killing_operator", "L_V g - g(nabla_. V, .) - g(., nabla_. V)", killing.tensor()));

  const Tensor02 d_eta = geometry::exterior_derivative(s.eta(), s.convention());
  if (n == 3) {
    out.items.push_back(residual_result("dd_eta", "d(d eta)", geometry::exterior_derivative(d_eta, s.convention()).coefficient, n));
  }
  return out;
}

}  // namespace pcv::analysis
