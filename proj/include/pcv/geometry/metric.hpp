/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <span>

#include "pcv/geometry/linalg.hpp"
#include "pcv/geometry/tensor.hpp"

namespace pcv::geometry {

/// Nondegenerate symmetric covariant 2-tensor with its inverse and
/// determinant cached at construction.
class Metric {
 public:
  /// Throws std::invalid_argument when g is not symmetric and DegenerateMetric
  /// when det(g) is identically zero.
  explicit Metric(Tensor02 g);

  std::size_t dim() const { return g_.dim(); }
  const Tensor02& g() const { return g_; }
  const Tensor20& inverse() const { return inverse_; }
  const RationalFunction& det() const { return det_; }

  RationalFunction operator()(const VectorField& x, const VectorField& y) const { return apply(g_, x, y); }
  /// X^flat = g(X, .)
  OneForm lower(const VectorField& x) const;
  /// omega^sharp, the vector with g(omega^sharp, .) = omega
  VectorField raise(const OneForm& omega) const;
  /// (X, Y) -> g(X, A Y)
  Tensor02 lower(const Tensor11& a) const;
  /// Q = g^-1 S, i.e. g(Q X, Y) = S(X, Y) for symmetric S.
  Tensor11 raise(const Tensor02& s) const;

  friend bool operator==(const Metric& a, const Metric& b) { return a.g_ == b.g_; }

 private:
  Tensor02 g_;
  Tensor20 inverse_;
  RationalFunction det_;
};

/// Gamma(k, i, j) = Gamma^k_ij, so that (nabla_{d_i} d_j)^k = Gamma^k_ij.
using Christoffel = TensorField<1, 2>;
/// R(l, i, j, k) = (R(d_i, d_j) d_k)^l with
/// R(X, Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y].
using RiemannTensor = TensorField<1, 3>;

/// Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij)
Christoffel christoffel(const Metric& g);
RiemannTensor riemann(const Christoffel& gamma);
RiemannTensor riemann(const Metric& g);
/// S_jk = R^i_ijk, i.e. S(Y, Z) = trace(X -> R(X, Y) Z).
Tensor02 ricci(const RiemannTensor& r);
Tensor02 ricci(const Metric& g);
Tensor11 ricci_operator(const Metric& g);
RationalFunction scalar_curvature(const Metric& g);

/// Everything derived from the Levi-Civita connection, computed once.
struct Curvature {
  Christoffel gamma;
  RiemannTensor riemann;
  Tensor02 ricci;
  /// Q with g(QX, Y) = S(X, Y)
  Tensor11 ricci_operator;
  RationalFunction scalar;
};

Curvature curvature(const Metric& g);

/// nabla_X Y for vector fields.
VectorField covariant_derivative(const Christoffel& gamma, const VectorField& x, const VectorField& y);

/// Levi-Civita covariant derivative of any tensor. The new covariant index is
/// the derivative direction and is placed first among the lower indices:
/// (nabla T)^{a...}_{i b...} = (nabla_{d_i} T)^{a...}_{b...}.
Tensor covariant_derivative(const Tensor& t, const Christoffel& gamma);

template <int Up, int Down>
TensorField<Up, Down + 1> covariant_derivative(const TensorField<Up, Down>& t, const Christoffel& gamma) {
  return TensorField<Up, Down + 1>(covariant_derivative(t.tensor(), gamma));
}

/// d_i f, as the covariant derivative of a function.
OneForm differential(const RationalFunction& f, std::size_t dim);

/// R(X, Y) Z
VectorField apply(const RiemannTensor& r, const VectorField& x, const VectorField& y, const VectorField& z);
/// (nabla_X A) Y for a (1,2) tensor from covariant_derivative of a (1,1) tensor.
VectorField apply(const Tensor12& t, const VectorField& x, const VectorField& y);

/// Covariant Riemann tensor Rm(i, j, k, w) = g(R(d_i, d_j) d_k, d_w).
Tensor04 lower_riemann(const RiemannTensor& r, const Metric& g);

}  // namespace pcv::geometry
