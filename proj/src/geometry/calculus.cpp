/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/geometry/calculus.hpp"

namespace pcv::geometry {

ExteriorConvention default_convention() { return ExteriorConvention{Rational(1, 2), Rational(1, 2)}; }

ExteriorConvention convention_with_kappa(const Rational& kappa) { return ExteriorConvention{kappa, kappa}; }

std::string to_string(const ExteriorConvention& c) {
  return "kappa=" + ratcas::to_string(c.kappa) + " wedge=" + ratcas::to_string(c.wedge);
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  const auto n = x.dim();
  VectorField out(n);
  for (std::size_t k = 0; k < n; ++k) out(k) = directional(x, y(k)) - directional(y, x(k));
  return out;
}

RationalFunction lie_derivative(const RationalFunction& f, const VectorField& v) { return directional(v, f); }

Tensor lie_derivative(const Tensor& t, const VectorField& v) {
  const auto n = t.dim();
  const int up = t.up();
  // dv(a, m) = d_m V^a
  std::vector<RationalFunction> dv(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t m = 0; m < n; ++m) dv[a * n + m] = v(a).partial(m);

  Tensor out(n, up, t.down());
  std::vector<std::size_t> idx;
  for (std::size_t f = 0; f < t.size(); ++f) {
    idx = t.multi_index(f);
    RationalFunction value = directional(v, t.components()[f]);
    for (int s = 0; s < t.rank(); ++s) {
      const std::size_t keep = idx[s];
      for (std::size_t m = 0; m < n; ++m) {
        idx[s] = m;
        const auto& tm = t.at(idx);
        if (tm.is_zero()) continue;
        if (s < up) {
          const auto& d = dv[keep * n + m];
          if (!d.is_zero()) value -= tm * d;
        } else {
          const auto& d = dv[m * n + keep];
          if (!d.is_zero()) value += tm * d;
        }
      }
      idx[s] = keep;
    }
    out.components()[f] = std::move(value);
  }
  return out;
}

OneForm exterior_derivative(const RationalFunction& f, std::size_t dim) { return differential(f, dim); }

Tensor02 exterior_derivative(const OneForm& omega, const ExteriorConvention& conv) {
  const auto n = omega.dim();
  Tensor02 out(n);
  const RationalFunction k(conv.kappa);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RationalFunction v = omega(j).partial(i) - omega(i).partial(j);
      if (!v.is_zero()) v *= k;
      out(i, j) = std::move(v);
    }
  return out;
}

namespace {

void require_three_dim_two_form(const Tensor02& phi) {
  if (phi.dim() != 3) throw std::invalid_argument("three-forms are only supported in dimension 3");
  if (!is_antisymmetric(phi)) throw std::invalid_argument("2-form argument is not antisymmetric");
}

}  // namespace

ThreeForm exterior_derivative(const Tensor02& phi, const ExteriorConvention& conv) {
  require_three_dim_two_form(phi);
  RationalFunction v = phi(1, 2).partial(0) + phi(2, 0).partial(1) + phi(0, 1).partial(2);
  if (!v.is_zero()) v *= RationalFunction(conv.kappa);
  return ThreeForm{std::move(v)};
}

ThreeForm wedge(const OneForm& eta, const Tensor02& phi, const ExteriorConvention& conv) {
  require_three_dim_two_form(phi);
  if (eta.dim() != 3) throw std::invalid_argument("dimension mismatch in wedge");
  RationalFunction v = eta(0) * phi(1, 2) + eta(1) * phi(2, 0) + eta(2) * phi(0, 1);
  if (!v.is_zero()) v *= RationalFunction(conv.wedge);
  return ThreeForm{std::move(v)};
}

VectorField gradient(const RationalFunction& f, const Metric& g) { return g.raise(differential(f, g.dim())); }

RationalFunction divergence(const VectorField& x, const Christoffel& gamma) {
  const auto n = x.dim();
  RationalFunction d;
  for (std::size_t i = 0; i < n; ++i) d += x(i).partial(i);
  for (std::size_t k = 0; k < n; ++k) {
    if (x(k).is_zero()) continue;
    RationalFunction trace_k;
    for (std::size_t i = 0; i < n; ++i) trace_k += gamma(i, i, k);
    if (!trace_k.is_zero()) d += trace_k * x(k);
  }
  return d;
}

RationalFunction divergence(const VectorField& x, const Metric& g) { return divergence(x, christoffel(g)); }

RationalFunction laplacian(const RationalFunction& f, const Metric& g, const Christoffel& gamma) {
  return -divergence(gradient(f, g), gamma);
}

RationalFunction laplacian(const RationalFunction& f, const Metric& g) { return laplacian(f, g, christoffel(g)); }

Tensor02 hessian(const RationalFunction& f, const Christoffel& gamma) {
  return covariant_derivative(differential(f, gamma.dim()), gamma);
}

}  // namespace pcv::geometry
