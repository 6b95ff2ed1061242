/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>

#include "pcv/analysis/solitons.hpp"

namespace pcv::analysis {

/// xi(r) on para-Sasakian and paracosymplectic structures, xi(r) + 2(r + 6)
/// on para-Kenmotsu ones. Throws AnalysisError for other classes.
AxiomResult xi_scalar_derivative_check(const ParacontactStructure& s);

/// Residual of the closed form of S (or Q) for the structure's class.
/// Throws AnalysisError for other classes.
AxiomResult ricci_closed_form_check(const ParacontactStructure& s);

enum class EinsteinVerdict { Einstein, ProperEtaEinstein, RicciFlat, None };

std::string to_string(EinsteinVerdict v);

struct EinsteinReport {
  std::optional<RationalFunction> alpha;
  std::optional<RationalFunction> beta;
  EinsteinVerdict verdict = EinsteinVerdict::None;
  /// Q - alpha I - beta eta (x) xi for the solved alpha, beta.
  Tensor11 residual;
};

/// Solves Q = alpha I + beta eta (x) xi.
EinsteinReport einstein_classify(const ParacontactStructure& s);

struct ConstantCurvatureReport {
  std::optional<Rational> c;
  /// R(X, Y) Z - c (g(Y, Z) X - g(X, Z) Y) for the candidate c, if one was found.
  std::optional<geometry::Tensor13> residual;
};

ConstantCurvatureReport constant_curvature_solve(const ParacontactStructure& s);

/// R(X, Y) Z - [g(Y, Z) QX - g(X, Z) QY + g(QY, Z) X - g(QX, Z) Y
///              - (r/2)(g(Y, Z) X - g(X, Z) Y)]. Dimension 3 only.
geometry::Tensor13 dim3_curvature_identity_residual(const ParacontactStructure& s);
AxiomResult dim3_curvature_identity_check(const ParacontactStructure& s);

/// Identities that hold for every metric: Riemann antisymmetry, first Bianchi,
/// pair symmetry, metricity, contracted Bianchi, the Killing-operator form of
/// L_V g for the given V, and d(d eta) = 0.
AxiomReport engine_self_tests(const ParacontactStructure& s, const VectorField& v);

}  // namespace pcv::analysis
