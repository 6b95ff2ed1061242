/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/geometry/metric.hpp"

namespace pcv::geometry {

namespace {

Tensor20 to_tensor20(const Matrix& m) {
  const auto n = m.size();
  Tensor20 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = m[i][j];
  return t;
}

}  // namespace

Metric::Metric(Tensor02 g) : g_(std::move(g)), inverse_(g_.dim()) {
  if (!is_symmetric(g_)) throw std::invalid_argument("metric is not symmetric");
  const Matrix m = to_matrix(g_.tensor());
  det_ = determinant(m);
  if (det_.is_zero()) throw DegenerateMetric("metric determinant vanishes identically");
  auto inv = geometry::inverse(m);
  if (!inv) throw DegenerateMetric("metric is not invertible");
  inverse_ = to_tensor20(*inv);
}

OneForm Metric::lower(const VectorField& x) const {
  const auto n = dim();
  OneForm w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!g_(i, j).is_zero() && !x(j).is_zero()) w(i) += g_(i, j) * x(j);
  return w;
}

VectorField Metric::raise(const OneForm& omega) const {
  const auto n = dim();
  VectorField v(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!inverse_(i, j).is_zero() && !omega(j).is_zero()) v(i) += inverse_(i, j) * omega(j);
  return v;
}

Tensor02 Metric::lower(const Tensor11& a) const {
  const auto n = dim();
  Tensor02 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!g_(i, k).is_zero() && !a(k, j).is_zero()) t(i, j) += g_(i, k) * a(k, j);
  return t;
}

Tensor11 Metric::raise(const Tensor02& s) const {
  const auto n = dim();
  Tensor11 q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!inverse_(i, k).is_zero() && !s(k, j).is_zero()) q(i, j) += inverse_(i, k) * s(k, j);
  return q;
}

// ---------------------------------------------------------------------------

Christoffel christoffel(const Metric& g) {
  const auto n = g.dim();
  // dg(l, i, j) = d_l g_ij
  Tensor dg(n, 0, 3);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dg(l, i, j) = g.g()(i, j).partial(l);

  // First kind: Gamma_{l,ij} = 1/2 (d_i g_jl + d_j g_il - d_l g_ij)
  Tensor first(n, 0, 3);
  const RationalFunction half(Rational(1, 2));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        RationalFunction v = dg(i, j, l) + dg(j, i, l) - dg(l, i, j);
        if (!v.is_zero()) v *= half;
        first(l, i, j) = v;
        first(l, j, i) = v;
      }

  Christoffel gamma(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        RationalFunction s;
        for (std::size_t l = 0; l < n; ++l)
          if (!g.inverse()(k, l).is_zero() && !first(l, i, j).is_zero()) s += g.inverse()(k, l) * first(l, i, j);
        gamma(k, i, j) = s;
        gamma(k, j, i) = s;
      }
  return gamma;
}

RiemannTensor riemann(const Christoffel& gamma) {
  const auto n = gamma.dim();
  // dgamma(m, l, j, k) = d_m Gamma^l_jk
  Tensor dgamma(n, 0, 4);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) {
          const auto d = gamma(l, j, k).partial(m);
          dgamma(m, l, j, k) = d;
          dgamma(m, l, k, j) = d;
        }

  RiemannTensor r(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          // Every (i, j) pair is computed independently so that antisymmetry
          // stays a checkable property rather than a storage artifact.
          RationalFunction v = dgamma(i, l, j, k) - dgamma(j, l, i, k);
          for (std::size_t m = 0; m < n; ++m) {
            if (!gamma(l, i, m).is_zero() && !gamma(m, j, k).is_zero()) v += gamma(l, i, m) * gamma(m, j, k);
            if (!gamma(l, j, m).is_zero() && !gamma(m, i, k).is_zero()) v -= gamma(l, j, m) * gamma(m, i, k);
          }
          r(l, i, j, k) = std::move(v);
        }
  return r;
}

RiemannTensor riemann(const Metric& g) { return riemann(christoffel(g)); }

Tensor02 ricci(const RiemannTensor& r) {
  const auto n = r.dim();
  Tensor02 s(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (!r(i, i, j, k).is_zero()) s(j, k) += r(i, i, j, k);
  return s;
}

Tensor02 ricci(const Metric& g) { return ricci(riemann(g)); }

Tensor11 ricci_operator(const Metric& g) { return g.raise(ricci(g)); }

RationalFunction scalar_curvature(const Metric& g) { return trace(ricci_operator(g)); }

Curvature curvature(const Metric& g) {
  Christoffel gamma = christoffel(g);
  RiemannTensor rm = riemann(gamma);
  Tensor02 s = ricci(rm);
  Tensor11 q = g.raise(s);
  RationalFunction r = trace(q);
  return Curvature{std::move(gamma), std::move(rm), std::move(s), std::move(q), std::move(r)};
}

// ---------------------------------------------------------------------------

VectorField covariant_derivative(const Christoffel& gamma, const VectorField& x, const VectorField& y) {
  const auto n = gamma.dim();
  VectorField out(n);
  for (std::size_t k = 0; k < n; ++k) {
    RationalFunction v = directional(x, y(k));
    for (std::size_t i = 0; i < n; ++i) {
      if (x(i).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!gamma(k, i, j).is_zero() && !y(j).is_zero()) v += gamma(k, i, j) * x(i) * y(j);
    }
    out(k) = std::move(v);
  }
  return out;
}

Tensor covariant_derivative(const Tensor& t, const Christoffel& gamma) {
  const auto n = t.dim();
  const int up = t.up();
  const int down = t.down();
  Tensor out(n, up, down + 1);
  std::vector<std::size_t> src(static_cast<std::size_t>(t.rank()));
  for (std::size_t f = 0; f < out.size(); ++f) {
    const auto idx = out.multi_index(f);
    const std::size_t dir = idx[static_cast<std::size_t>(up)];
    // Index of the source component: drop the derivative slot.
    for (int a = 0; a < up; ++a) src[a] = idx[a];
    for (int b = 0; b < down; ++b) src[up + b] = idx[up + 1 + b];

    RationalFunction v = t.at(src).partial(dir);
    for (int s = 0; s < up + down; ++s) {
      const std::size_t keep = src[s];
      for (std::size_t m = 0; m < n; ++m) {
        src[s] = m;
        const auto& tm = t.at(src);
        if (tm.is_zero()) continue;
        if (s < up) {
          const auto& c = gamma(keep, dir, m);
          if (!c.is_zero()) v += c * tm;
        } else {
          const auto& c = gamma(m, dir, keep);
          if (!c.is_zero()) v -= c * tm;
        }
      }
      src[s] = keep;
    }
    out.components()[f] = std::move(v);
  }
  return out;
}

OneForm differential(const RationalFunction& f, std::size_t dim) {
  OneForm w(dim);
  for (std::size_t i = 0; i < dim; ++i) w(i) = f.partial(i);
  return w;
}

VectorField apply(const RiemannTensor& r, const VectorField& x, const VectorField& y, const VectorField& z) {
  const auto n = r.dim();
  VectorField out(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      if (x(i).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y(j).is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (!r(l, i, j, k).is_zero() && !z(k).is_zero()) out(l) += r(l, i, j, k) * x(i) * y(j) * z(k);
      }
    }
  return out;
}

VectorField apply(const Tensor12& t, const VectorField& x, const VectorField& y) {
  const auto n = t.dim();
  VectorField out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (x(i).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!t(k, i, j).is_zero() && !y(j).is_zero()) out(k) += t(k, i, j) * x(i) * y(j);
    }
  return out;
}

Tensor04 lower_riemann(const RiemannTensor& r, const Metric& g) {
  const auto n = r.dim();
  Tensor04 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t l = 0; l < n; ++l)
            if (!r(l, i, j, k).is_zero() && !g.g()(l, w).is_zero()) out(i, j, k, w) += g.g()(l, w) * r(l, i, j, k);
  return out;
}

}  // namespace pcv::geometry
