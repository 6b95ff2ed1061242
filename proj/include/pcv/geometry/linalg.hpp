/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <vector>

#include "pcv/geometry/tensor.hpp"

namespace pcv::geometry {

/// Dense square matrix over the field of rational functions, row-major.
using Matrix = std::vector<std::vector<RationalFunction>>;

Matrix to_matrix(const Tensor& t);
RationalFunction determinant(Matrix m);
/// std::nullopt when the matrix is singular.
std::optional<Matrix> inverse(Matrix m);
/// Solves m x = b; std::nullopt when singular.
std::optional<std::vector<RationalFunction>> solve(Matrix m, std::vector<RationalFunction> b);

struct Inertia {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of an exact symmetric rational matrix by symmetric
/// (congruence) Gaussian elimination.
Inertia inertia(std::vector<std::vector<Rational>> m);

}  // namespace pcv::geometry
