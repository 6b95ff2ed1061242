/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/geometry/linalg.hpp"

#include <utility>

namespace pcv::geometry {

namespace {

// Prefer constant pivots, then pivots with the fewest terms, to keep
// intermediate expressions small.
std::size_t pivot_row(const Matrix& m, std::size_t col) {
  std::size_t best = m.size();
  std::size_t best_cost = 0;
  for (std::size_t r = col; r < m.size(); ++r) {
    const auto& e = m[r][col];
    if (e.is_zero()) continue;
    const std::size_t cost = e.is_constant() ? 0 : e.numerator().size() + e.denominator().size();
    if (best == m.size() || cost < best_cost) {
      best = r;
      best_cost = cost;
    }
  }
  return best;
}

}  // namespace

Matrix to_matrix(const Tensor& t) {
  if (t.rank() != 2) throw std::invalid_argument("matrix view needs a rank-2 tensor");
  const auto n = t.dim();
  Matrix m(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = t.components()[i * n + j];
  return m;
}

RationalFunction determinant(Matrix m) {
  const auto n = m.size();
  RationalFunction det(1);
  for (std::size_t c = 0; c < n; ++c) {
    const auto p = pivot_row(m, c);
    if (p == n) return RationalFunction{};
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const RationalFunction f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::optional<Matrix> inverse(Matrix m) {
  const auto n = m.size();
  Matrix inv(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    const auto p = pivot_row(m, c);
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const RationalFunction scale = RationalFunction(1) / m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] *= scale;
      inv[c][k] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const RationalFunction f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        if (!m[c][k].is_zero()) m[r][k] -= f * m[c][k];
        if (!inv[c][k].is_zero()) inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

std::optional<std::vector<RationalFunction>> solve(Matrix m, std::vector<RationalFunction> b) {
  auto inv = inverse(std::move(m));
  if (!inv) return std::nullopt;
  const auto n = b.size();
  std::vector<RationalFunction> x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(*inv)[i][j].is_zero() && !b[j].is_zero()) x[i] += (*inv)[i][j] * b[j];
  return x;
}

Inertia inertia(std::vector<std::vector<Rational>> m) {
  const auto n = m.size();
  Inertia result;
  for (std::size_t c = 0; c < n; ++c) {
    // Find a nonzero diagonal pivot in the trailing block.
    std::size_t p = n;
    for (std::size_t r = c; r < n; ++r) {
      if (m[r][r] != 0) {
        p = r;
        break;
      }
    }
    if (p == n) {
      // All trailing diagonal entries vanish: an off-diagonal a_ij != 0 gives a
      // nonzero diagonal after the congruence e_i -> e_i + e_j.
      std::size_t oi = n;
      std::size_t oj = n;
      for (std::size_t i = c; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (m[i][j] != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        result.zero += static_cast<int>(n - c);
        return result;
      }
      for (std::size_t k = 0; k < n; ++k) m[oi][k] += m[oj][k];
      for (std::size_t k = 0; k < n; ++k) m[k][oi] += m[k][oj];
      p = oi;
    }
    if (p != c) {
      std::swap(m[p], m[c]);
      for (auto& row : m) std::swap(row[p], row[c]);
    }
    const Rational pivot = m[c][c];
    (pivot > 0 ? result.plus : result.minus) += 1;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / pivot;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      for (std::size_t k = c; k < n; ++k) m[k][r] = m[r][k];
    }
  }
  return result;
}

}  // namespace pcv::geometry
