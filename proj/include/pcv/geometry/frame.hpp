/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <vector>

#include "pcv/geometry/linalg.hpp"
#include "pcv/geometry/metric.hpp"
#include "pcv/geometry/tensor.hpp"

namespace pcv::geometry {

/// Named vector fields that are linearly independent as rational functions
/// (det of the component matrix is not identically zero). Signs are the
/// declared values g(E_a, E_a) for a pseudo-orthonormal frame.
class Frame {
 public:
  /// Throws DegenerateFrame when det == 0 and std::invalid_argument on
  /// mismatched sizes or signs other than +1/-1.
  Frame(std::vector<std::string> names, std::vector<VectorField> vectors, std::vector<int> signs);

  std::size_t size() const { return vectors_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<VectorField>& vectors() const { return vectors_; }
  const VectorField& operator[](std::size_t a) const { return vectors_[a]; }
  const std::vector<int>& signs() const { return signs_; }
  /// theta^a with theta^a(E_b) = delta^a_b.
  const std::vector<OneForm>& coframe() const { return coframe_; }

 private:
  std::vector<std::string> names_;
  std::vector<VectorField> vectors_;
  std::vector<int> signs_;
  std::vector<OneForm> coframe_;
};

/// Coefficients c with W = sum_a c_a E_a.
std::vector<RationalFunction> express_in_frame(const VectorField& w, const Frame& frame);

/// sum_a sign_a theta^a (x) theta^a: the unique metric in which the frame is
/// pseudo-orthonormal with the declared signs.
Tensor02 metric_from_frame(const Frame& frame);

/// Frame components of a vector-valued expression: table[a][b][c] is the
/// E_c coefficient.
using ConnectionTable = std::vector<std::vector<std::vector<RationalFunction>>>;
/// table[a][b][c][d] is the E_d coefficient of R(E_a, E_b) E_c.
using CurvatureTable = std::vector<std::vector<std::vector<std::vector<RationalFunction>>>>;

/// table[a][b] = nabla_{E_a} E_b in frame components.
ConnectionTable connection_table(const Frame& frame, const Christoffel& gamma);
CurvatureTable curvature_table(const Frame& frame, const RiemannTensor& r);

/// (n_plus, n_minus) of g at p. Throws ratcas::PoleError at a pole and
/// DegenerateMetric when g(p) is singular.
Inertia signature_at(const Metric& g, std::span<const Rational> p);

}  // namespace pcv::geometry
