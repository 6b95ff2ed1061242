/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcv/structures/classify.hpp"

namespace pcv::analysis {

using geometry::OneForm;
using geometry::Tensor;
using geometry::Tensor02;
using geometry::Tensor11;
using geometry::VectorField;
using ratcas::Rational;
using ratcas::RationalFunction;
using structures::AxiomReport;
using structures::AxiomResult;
using structures::ParacontactStructure;

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SignClass { Shrinking, Steady, Expanding };

std::string to_string(SignClass c);

/// Yamabe: shrinking for lambda > 0, expanding for lambda < 0.
SignClass yamabe_sign(const Rational& lambda);
/// Ricci, with the opposite orientation: shrinking for mu < 0, expanding for mu > 0.
SignClass ricci_sign(const Rational& mu);

struct SolitonReport {
  Tensor02 residual;
  bool holds = false;
  Rational constant;
  SignClass sign = SignClass::Steady;
  /// (lambda - r)/2 for Yamabe solitons.
  std::optional<RationalFunction> rho;
  AxiomReport derived_checks;
};

/// L_V g - (lambda - r) g
SolitonReport yamabe_check(const ParacontactStructure& s, const VectorField& v, const Rational& lambda);
/// lambda with L_V g + r g = lambda g, or empty when there is none.
std::optional<Rational> yamabe_solve_lambda(const ParacontactStructure& s, const VectorField& v);

struct GradientSolitonReport {
  VectorField v;
  SolitonReport soliton;
};

/// yamabe_check with V = grad f.
GradientSolitonReport gradient_soliton_check(const ParacontactStructure& s, const RationalFunction& f,
                                             const Rational& lambda);

/// L_V g + 2 S + 2 mu g
SolitonReport ricci_soliton_check(const ParacontactStructure& s, const VectorField& v, const Rational& mu);
std::optional<Rational> ricci_solve_mu(const ParacontactStructure& s, const VectorField& v);

/// Residual L_V g.
AxiomResult killing_check(const ParacontactStructure& s, const VectorField& v);

/// rho with L_V g = 2 rho g, or empty when V is not conformal.
std::optional<RationalFunction> conformal_factor(const ParacontactStructure& s, const VectorField& v);

struct ConformalIdentities {
  RationalFunction rho;
  /// L_V S + (n - 2) Hess rho - (Delta rho) g
  Tensor02 ricci_residual;
  /// L_V r + 2 rho r - 2 (n - 1) Delta rho
  RationalFunction scalar_residual;
};

/// Throws AnalysisError when V is not conformal.
ConformalIdentities conformal_identities_check(const ParacontactStructure& s, const VectorField& v);

/// Scalar consequences of L_V g = (lambda - r) g. The class-specific entries
/// follow structures::classify(s). Throws AnalysisError when (V, lambda) is not
/// a Yamabe soliton.
AxiomReport soliton_consequence_suite(const ParacontactStructure& s, const VectorField& v, const Rational& lambda);

/// L_V eta, L_V xi, L_V Phi and L_V g.
AxiomReport automorphism_check(const ParacontactStructure& s, const VectorField& v);

struct CollinearResidual {
  /// L_{b xi} g computed directly.
  Tensor02 direct;
  /// The class closed form: db (x) eta + eta (x) db, plus 2b(g - eta (x) eta)
  /// on para-Kenmotsu structures.
  Tensor02 closed_form;
  bool agree = false;
};

/// Throws AnalysisError unless s is para-Sasakian or para-Kenmotsu.
CollinearResidual collinear_residual(const ParacontactStructure& s, const RationalFunction& b);

}  // namespace pcv::analysis
