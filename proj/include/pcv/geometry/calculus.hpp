/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>

#include "pcv/geometry/metric.hpp"
#include "pcv/geometry/tensor.hpp"

namespace pcv::geometry {

/// Normalisation of d and of the 1-form/2-form wedge.
///
/// For a 1-form, (d eta)(X, Y) = kappa (X eta(Y) - Y eta(X) - eta([X, Y])).
/// For a 2-form in dimension 3, (d Phi)(X, Y, Z) = kappa * (cyclic sum of
/// X Phi(Y, Z) minus cyclic sum of Phi([X, Y], Z)).
/// (eta ^ Phi)(X, Y, Z) = wedge * (eta(X) Phi(Y, Z) + eta(Y) Phi(Z, X) + eta(Z) Phi(X, Y)).
struct ExteriorConvention {
  Rational kappa;
  Rational wedge;

  friend bool operator==(const ExteriorConvention&, const ExteriorConvention&) = default;
};

/// kappa = 1/2, wedge = 1/2. With these, d eta = Phi holds on the bundled
/// para-Sasakian example (and N_phi = [phi, phi] - 2 d eta (x) xi vanishes),
/// while d Phi = 2 eta ^ Phi holds on the para-Kenmotsu example.
/// calibrate_convention() in the structures module re-derives both numbers.
ExteriorConvention default_convention();

/// Convention with the given kappa and wedge = kappa, which keeps the ratio
/// d Phi / (eta ^ Phi) independent of kappa.
ExteriorConvention convention_with_kappa(const Rational& kappa);

std::string to_string(const ExteriorConvention& c);

/// [X, Y]^k = X^i d_i Y^k - Y^i d_i X^k
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// L_V f = V(f)
RationalFunction lie_derivative(const RationalFunction& f, const VectorField& v);
/// Lie derivative of a tensor of any valence.
Tensor lie_derivative(const Tensor& t, const VectorField& v);

template <int Up, int Down>
TensorField<Up, Down> lie_derivative(const TensorField<Up, Down>& t, const VectorField& v) {
  return TensorField<Up, Down>(lie_derivative(t.tensor(), v));
}

/// df (no convention factor on functions).
OneForm exterior_derivative(const RationalFunction& f, std::size_t dim);
/// (d omega)_ij = kappa (d_i omega_j - d_j omega_i)
Tensor02 exterior_derivative(const OneForm& omega, const ExteriorConvention& conv);
/// Dimension 3 only. Throws std::invalid_argument if phi is not antisymmetric.
ThreeForm exterior_derivative(const Tensor02& phi, const ExteriorConvention& conv);
/// Dimension 3 only. Throws std::invalid_argument if phi is not antisymmetric.
ThreeForm wedge(const OneForm& eta, const Tensor02& phi, const ExteriorConvention& conv);

/// (Df)^k = g^kj d_j f
VectorField gradient(const RationalFunction& f, const Metric& g);
/// div X = d_i X^i + Gamma^i_ik X^k
RationalFunction divergence(const VectorField& x, const Christoffel& gamma);
RationalFunction divergence(const VectorField& x, const Metric& g);
/// Delta f = -div(Df). Note the sign.
RationalFunction laplacian(const RationalFunction& f, const Metric& g, const Christoffel& gamma);
RationalFunction laplacian(const RationalFunction& f, const Metric& g);
/// Hess f (X, Y) = g(nabla_X Df, Y) = (nabla df)(X, Y)
Tensor02 hessian(const RationalFunction& f, const Christoffel& gamma);

}  // namespace pcv::geometry
