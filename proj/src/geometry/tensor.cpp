/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/geometry/tensor.hpp"

#include <algorithm>

namespace pcv::geometry {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Tensor::Tensor(std::size_t dim, int up, int down)
    : dim_(dim), up_(up), down_(down), components_(ipow(dim, up + down)) {
  if (dim == 0 || up < 0 || down < 0) throw std::invalid_argument("invalid tensor shape");
}

Tensor::Tensor(std::size_t dim, int up, int down, std::vector<RationalFunction> components)
    : dim_(dim), up_(up), down_(down), components_(std::move(components)) {
  if (dim == 0 || up < 0 || down < 0) throw std::invalid_argument("invalid tensor shape");
  if (components_.size() != ipow(dim, up + down)) {
    throw std::invalid_argument("expected " + std::to_string(ipow(dim, up + down)) + " components, got " +
                                std::to_string(components_.size()));
  }
}

std::size_t Tensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != static_cast<std::size_t>(rank())) throw std::out_of_range("wrong number of tensor indices");
  std::size_t flat = 0;
  for (auto i : index) {
    if (i >= dim_) throw std::out_of_range("tensor index out of range");
    flat = flat * dim_ + i;
  }
  return flat;
}

std::vector<std::size_t> Tensor::multi_index(std::size_t flat) const {
  std::vector<std::size_t> idx(static_cast<std::size_t>(rank()));
  for (auto k = idx.size(); k-- > 0;) {
    idx[k] = flat % dim_;
    flat /= dim_;
  }
  return idx;
}

bool Tensor::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& c) { return c.is_zero(); });
}

void Tensor::require_same_shape(const Tensor& other) const {
  if (dim_ != other.dim_ || up_ != other.up_ || down_ != other.down_) {
    throw std::invalid_argument("tensor shape mismatch");
  }
}

Tensor& Tensor::operator+=(const Tensor& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= other.components_[i];
  return *this;
}

Tensor& Tensor::operator*=(const RationalFunction& f) {
  for (auto& c : components_) c *= f;
  return *this;
}

Tensor Tensor::operator-() const {
  Tensor t = *this;
  for (auto& c : t.components_) c = -c;
  return t;
}

// ---------------------------------------------------------------------------

VectorField vector_field(std::initializer_list<RationalFunction> components) {
  return VectorField(components.size(), std::vector<RationalFunction>(components));
}

OneForm one_form(std::initializer_list<RationalFunction> components) {
  return OneForm(components.size(), std::vector<RationalFunction>(components));
}

Tensor11 tensor11(std::size_t dim, std::vector<RationalFunction> entries) { return Tensor11(dim, std::move(entries)); }

Tensor02 tensor02(std::size_t dim, std::vector<RationalFunction> entries) { return Tensor02(dim, std::move(entries)); }

VectorField coordinate_field(std::size_t dim, std::size_t i) {
  VectorField v(dim);
  v(i) = 1;
  return v;
}

OneForm coordinate_form(std::size_t dim, std::size_t i) {
  OneForm w(dim);
  w(i) = 1;
  return w;
}

Tensor11 identity(std::size_t dim) {
  Tensor11 a(dim);
  for (std::size_t i = 0; i < dim; ++i) a(i, i) = 1;
  return a;
}

RationalFunction trace(const Tensor11& a) {
  RationalFunction t;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

Tensor02 transpose(const Tensor02& a) {
  Tensor02 t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t(i, j) = a(j, i);
  return t;
}

bool is_symmetric(const Tensor02& a) { return a == transpose(a); }

bool is_antisymmetric(const Tensor02& a) { return a == -transpose(a); }

VectorField apply(const Tensor11& a, const VectorField& x) {
  const auto n = a.dim();
  VectorField r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero() && !x(j).is_zero()) r(i) += a(i, j) * x(j);
  return r;
}

RationalFunction apply(const OneForm& omega, const VectorField& x) {
  RationalFunction s;
  for (std::size_t i = 0; i < omega.dim(); ++i)
    if (!omega(i).is_zero() && !x(i).is_zero()) s += omega(i) * x(i);
  return s;
}

RationalFunction apply(const Tensor02& t, const VectorField& x, const VectorField& y) {
  RationalFunction s;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (!t(i, j).is_zero() && !y(j).is_zero()) s += t(i, j) * x(i) * y(j);
  }
  return s;
}

OneForm compose(const OneForm& omega, const Tensor11& a) {
  const auto n = a.dim();
  OneForm r(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!omega(i).is_zero() && !a(i, j).is_zero()) r(j) += omega(i) * a(i, j);
  return r;
}

Tensor11 compose(const Tensor11& a, const Tensor11& b) {
  const auto n = a.dim();
  Tensor11 r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
  return r;
}

Tensor11 outer(const OneForm& omega, const VectorField& x) {
  const auto n = x.dim();
  Tensor11 r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = x(i) * omega(j);
  return r;
}

Tensor02 outer(const OneForm& alpha, const OneForm& beta) {
  const auto n = alpha.dim();
  Tensor02 r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = alpha(i) * beta(j);
  return r;
}

Tensor02 symmetric_product(const OneForm& alpha, const OneForm& beta) {
  return outer(alpha, beta) + outer(beta, alpha);
}

RationalFunction directional(const VectorField& v, const RationalFunction& f) {
  RationalFunction s;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!v(i).is_zero()) s += v(i) * f.partial(i);
  return s;
}

std::vector<Rational> evaluate(const Tensor& t, std::span<const Rational> point) {
  std::vector<Rational> out;
  out.reserve(t.size());
  for (const auto& c : t.components()) out.push_back(c.evaluate(point));
  return out;
}

std::string describe(const Tensor& t, const CoordinateSystem& coords) { return describe(t, coords, coords.names()); }

std::string describe(const Tensor& t, const CoordinateSystem& coords, std::span<const std::string> index_labels) {
  std::string out;
  for (std::size_t f = 0; f < t.size(); ++f) {
    const auto& c = t.components()[f];
    if (c.is_zero()) continue;
    if (!out.empty()) out += "; ";
    if (t.rank() > 0) {
      out += '[';
      const auto idx = t.multi_index(f);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k > 0) out += ',';
        out += index_labels[idx[k]];
      }
      out += "]: ";
    }
    out += to_string(c, coords);
  }
  return out.empty() ? "0" : out;
}

}  // namespace pcv::geometry
