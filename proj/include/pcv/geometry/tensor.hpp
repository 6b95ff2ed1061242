/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcv/ratcas/rational_function.hpp"

namespace pcv::geometry {

using ratcas::CoordinateSystem;
using ratcas::Rational;
using ratcas::RationalFunction;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateMetric : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DegenerateFrame : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Coordinate components of a tensor field with runtime valence. Upper indices
/// come first, then lower ones; storage is row-major in that order, so a (1,1)
/// tensor is a matrix whose row is the upper index.
class Tensor {
 public:
  Tensor(std::size_t dim, int up, int down);
  Tensor(std::size_t dim, int up, int down, std::vector<RationalFunction> components);

  std::size_t dim() const { return dim_; }
  int up() const { return up_; }
  int down() const { return down_; }
  int rank() const { return up_ + down_; }
  std::size_t size() const { return components_.size(); }

  const std::vector<RationalFunction>& components() const { return components_; }
  std::vector<RationalFunction>& components() { return components_; }

  RationalFunction& at(std::span<const std::size_t> index) { return components_[flat_index(index)]; }
  const RationalFunction& at(std::span<const std::size_t> index) const { return components_[flat_index(index)]; }

  template <class... I>
  RationalFunction& operator()(I... index) {
    const std::array<std::size_t, sizeof...(I)> idx{static_cast<std::size_t>(index)...};
    return at(idx);
  }
  template <class... I>
  const RationalFunction& operator()(I... index) const {
    const std::array<std::size_t, sizeof...(I)> idx{static_cast<std::size_t>(index)...};
    return at(idx);
  }

  std::size_t flat_index(std::span<const std::size_t> index) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;

  bool is_zero() const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(const RationalFunction& f);
  Tensor operator-() const;
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const RationalFunction& f) { return a *= f; }
  friend Tensor operator*(const RationalFunction& f, Tensor a) { return a *= f; }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  void require_same_shape(const Tensor& other) const;

  std::size_t dim_;
  int up_;
  int down_;
  std::vector<RationalFunction> components_;
};

/// Tensor with compile-time valence (Up contravariant, Down covariant indices).
template <int Up, int Down>
class TensorField {
 public:
  static constexpr int kUp = Up;
  static constexpr int kDown = Down;

  explicit TensorField(std::size_t dim) : t_(dim, Up, Down) {}
  TensorField(std::size_t dim, std::vector<RationalFunction> components) : t_(dim, Up, Down, std::move(components)) {}
  explicit TensorField(Tensor t) : t_(std::move(t)) {
    if (t_.up() != Up || t_.down() != Down) throw std::invalid_argument("tensor valence mismatch");
  }

  std::size_t dim() const { return t_.dim(); }
  const Tensor& tensor() const& { return t_; }
  Tensor tensor() && { return std::move(t_); }
  const std::vector<RationalFunction>& components() const { return t_.components(); }
  bool is_zero() const { return t_.is_zero(); }

  template <class... I>
  RationalFunction& operator()(I... index) {
    static_assert(sizeof...(I) == Up + Down, "wrong number of indices");
    return t_(index...);
  }
  template <class... I>
  const RationalFunction& operator()(I... index) const {
    static_assert(sizeof...(I) == Up + Down, "wrong number of indices");
    return t_(index...);
  }

  TensorField& operator+=(const TensorField& o) {
    t_ += o.t_;
    return *this;
  }
  TensorField& operator-=(const TensorField& o) {
    t_ -= o.t_;
    return *this;
  }
  TensorField& operator*=(const RationalFunction& f) {
    t_ *= f;
    return *this;
  }
  TensorField operator-() const { return TensorField(-t_); }
  friend TensorField operator+(TensorField a, const TensorField& b) { return a += b; }
  friend TensorField operator-(TensorField a, const TensorField& b) { return a -= b; }
  friend TensorField operator*(TensorField a, const RationalFunction& f) { return a *= f; }
  friend TensorField operator*(const RationalFunction& f, TensorField a) { return a *= f; }

  friend bool operator==(const TensorField&, const TensorField&) = default;

 private:
  Tensor t_;
};

using VectorField = TensorField<1, 0>;
using OneForm = TensorField<0, 1>;
/// Endomorphism X -> AX; A(i, j) = A^i_j.
using Tensor11 = TensorField<1, 1>;
/// Covariant 2-tensor T(X, Y) = T_ij X^i Y^j.
using Tensor02 = TensorField<0, 2>;
using Tensor20 = TensorField<2, 0>;
using Tensor12 = TensorField<1, 2>;
using Tensor13 = TensorField<1, 3>;
using Tensor03 = TensorField<0, 3>;
using Tensor04 = TensorField<0, 4>;

/// Top-degree form in dimension 3: coefficient of dx^1 ^ dx^2 ^ dx^3, i.e. its
/// value on the ordered coordinate triple.
struct ThreeForm {
  RationalFunction coefficient;
  bool is_zero() const { return coefficient.is_zero(); }
  friend bool operator==(const ThreeForm&, const ThreeForm&) = default;
};

VectorField vector_field(std::initializer_list<RationalFunction> components);
OneForm one_form(std::initializer_list<RationalFunction> components);
/// Row-major entries; for Tensor11 rows are the upper index.
Tensor11 tensor11(std::size_t dim, std::vector<RationalFunction> entries);
Tensor02 tensor02(std::size_t dim, std::vector<RationalFunction> entries);
/// Coordinate basis field d/dx^i.
VectorField coordinate_field(std::size_t dim, std::size_t i);
OneForm coordinate_form(std::size_t dim, std::size_t i);

Tensor11 identity(std::size_t dim);
RationalFunction trace(const Tensor11& a);
Tensor02 transpose(const Tensor02& a);
bool is_symmetric(const Tensor02& a);
bool is_antisymmetric(const Tensor02& a);

/// (A X)^i = A^i_j X^j
VectorField apply(const Tensor11& a, const VectorField& x);
/// omega(X)
RationalFunction apply(const OneForm& omega, const VectorField& x);
/// T(X, Y)
RationalFunction apply(const Tensor02& t, const VectorField& x, const VectorField& y);
/// (omega o A)_j = omega_i A^i_j
OneForm compose(const OneForm& omega, const Tensor11& a);
/// (A B)^i_j = A^i_k B^k_j
Tensor11 compose(const Tensor11& a, const Tensor11& b);
/// (omega (x) X)^i_j = X^i omega_j, the endomorphism Y -> omega(Y) X.
Tensor11 outer(const OneForm& omega, const VectorField& x);
/// (alpha (x) beta)_ij = alpha_i beta_j
Tensor02 outer(const OneForm& alpha, const OneForm& beta);
/// Symmetrised alpha (x) beta + beta (x) alpha.
Tensor02 symmetric_product(const OneForm& alpha, const OneForm& beta);

/// V(f) = V^i d_i f
RationalFunction directional(const VectorField& v, const RationalFunction& f);

/// Exact component-wise evaluation. Throws ratcas::PoleError.
std::vector<Rational> evaluate(const Tensor& t, std::span<const Rational> point);

/// "0" or a listing of the nonzero components, e.g. "[0,2]: -1/z; [2,0]: 1/z".
std::string describe(const Tensor& t, const CoordinateSystem& coords);
/// As above, with index positions named by `index_labels` (e.g. frame names).
std::string describe(const Tensor& t, const CoordinateSystem& coords, std::span<const std::string> index_labels);

}  // namespace pcv::geometry
