/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/structures/axioms.hpp"

namespace pcv::structures {

using geometry::apply;
using geometry::compose;
using geometry::identity;
using geometry::lie_bracket;
using geometry::outer;
using geometry::trace;

namespace {

VectorField column(const Tensor11& a, std::size_t j) {
  VectorField v(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) v(i) = a(i, j);
  return v;
}

std::string point_text(const ParacontactStructure& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i > 0) out += ", ";
    out += s.coords()[i] + "=" + ratcas::to_string(s.base_point()[i]);
  }
  return out + ")";
}

}  // namespace

AxiomReport check_almost_paracontact(const ParacontactStructure& s) {
  const auto n = s.dim();
  AxiomReport r;
  r.items.push_back(residual_result("eta_xi", "eta(xi) - 1", apply(s.eta(), s.xi()) - RationalFunction(1), n));
  r.items.push_back(residual_result("phi_squared", "phi^2 - I + eta (x) xi",
                                    (compose(s.phi(), s.phi()) - identity(n) + outer(s.eta(), s.xi())).tensor()));
  r.items.push_back(residual_result("phi_xi", "phi xi", apply(s.phi(), s.xi()).tensor()));
  r.items.push_back(residual_result("eta_phi", "eta o phi", compose(s.eta(), s.phi()).tensor()));
  r.items.push_back(residual_result("trace_phi", "trace phi", trace(s.phi()), n));
  return r;
}

AxiomReport check_metric_compatibility(const ParacontactStructure& s) {
  const auto n = s.dim();
  const Tensor02& g = s.g().g();
  AxiomReport r;

  // g(phi X, phi Y) + g(X, Y) - eta(X) eta(Y) on coordinate fields.
  Tensor02 compat = g - outer(s.eta(), s.eta());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a) {
        if (s.phi()(a, i).is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b)
          if (!g(a, b).is_zero() && !s.phi()(b, j).is_zero()) compat(i, j) += s.phi()(a, i) * g(a, b) * s.phi()(b, j);
      }
  r.items.push_back(residual_result("compatibility", "g(phi X, phi Y) + g(X, Y) - eta(X) eta(Y)", compat.tensor()));
  r.items.push_back(residual_result("eta_dual", "g(X, xi) - eta(X)", (s.g().lower(s.xi()) - s.eta()).tensor()));

  AxiomResult sig;
  sig.name = "signature";
  sig.formula = "signature of g at the base point";
  const int expected_minus = static_cast<int>(n / 2);
  const int expected_plus = static_cast<int>(n) - expected_minus;
  try {
    const auto in = geometry::signature_at(s.g(), s.base_point());
    sig.holds = in.plus == expected_plus && in.minus == expected_minus;
    sig.detail = "(" + std::to_string(in.plus) + "," + std::to_string(in.minus) + ") at " + point_text(s);
  } catch (const geometry::DegenerateMetric&) {
    sig.holds = false;
    sig.detail = "degenerate at " + point_text(s);
  }
  r.items.push_back(std::move(sig));

  if (s.frame()) {
    const Frame& f = *s.frame();
    Tensor02 gram(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        gram(a, b) = s.g()(f[a], f[b]) - RationalFunction(a == b ? f.signs()[a] : 0);
    AxiomResult fr = residual_result("frame", "g(E_a, E_b) - sign_a delta_ab", gram.tensor());
    fr.labels = f.names();
    r.items.push_back(std::move(fr));
  }
  return r;
}

Tensor02 fundamental_two_form(const ParacontactStructure& s) { return s.g().lower(s.phi()); }

AxiomReport check_paracontact_metric(const ParacontactStructure& s) {
  AxiomReport r;
  const Tensor02 d_eta = geometry::exterior_derivative(s.eta(), s.convention());
  r.items.push_back(residual_result("paracontact", "d eta - Phi", (d_eta - fundamental_two_form(s)).tensor()));
  return r;
}

HOperator h_operator(const ParacontactStructure& s) {
  const auto n = s.dim();
  Tensor11 h = geometry::lie_derivative(s.phi(), s.xi());
  h *= RationalFunction(Rational(1, 2));

  AxiomReport r;
  r.items.push_back(residual_result("h_xi", "h xi", apply(h, s.xi()).tensor()));
  r.items.push_back(residual_result("trace_h", "trace h", trace(h), n));
  r.items.push_back(residual_result("trace_h_phi", "trace(h phi)", trace(compose(h, s.phi())), n));
  r.items.push_back(
      residual_result("h_anticommutes", "h phi + phi h", (compose(h, s.phi()) + compose(s.phi(), h)).tensor()));
  const Tensor02 gh = s.g().lower(h);
  r.items.push_back(residual_result("h_self_adjoint", "g(X, hY) - g(hX, Y)", (gh - geometry::transpose(gh)).tensor()));
  const Tensor11 nabla_xi(geometry::covariant_derivative(s.xi(), s.curvature().gamma).tensor());
  r.items.push_back(residual_result("nabla_xi", "nabla_X xi + phi X - phi h X",
                                    (nabla_xi + s.phi() - compose(s.phi(), h)).tensor()));
  return HOperator{std::move(h), std::move(r)};
}

geometry::Tensor12 nijenhuis_torsion(const ParacontactStructure& s) {
  const auto n = s.dim();
  geometry::Tensor12 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const VectorField ei = geometry::coordinate_field(n, i);
    const VectorField phi_i = column(s.phi(), i);
    for (std::size_t j = 0; j < n; ++j) {
      const VectorField ej = geometry::coordinate_field(n, j);
      const VectorField phi_j = column(s.phi(), j);
      // The coordinate bracket [d_i, d_j] vanishes, so the phi^2 term drops.
      const VectorField v = lie_bracket(phi_i, phi_j) - apply(s.phi(), lie_bracket(phi_i, ej)) -
                            apply(s.phi(), lie_bracket(ei, phi_j));
      for (std::size_t k = 0; k < n; ++k) t(k, i, j) = v(k);
    }
  }
  return t;
}

AxiomReport normality_check(const ParacontactStructure& s) {
  const auto n = s.dim();
  geometry::Tensor12 t = nijenhuis_torsion(s);
  const Tensor02 d_eta = geometry::exterior_derivative(s.eta(), s.convention());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!d_eta(i, j).is_zero() && !s.xi()(k).is_zero()) t(k, i, j) -= RationalFunction(2) * d_eta(i, j) * s.xi()(k);
  AxiomReport r;
  r.items.push_back(residual_result("normal", "[phi, phi](X, Y) - 2 d eta(X, Y) xi", t.tensor()));
  return r;
}

AlphaForm alpha_form_check(const ParacontactStructure& s) {
  const auto& conv = s.convention();
  const Tensor02 phi = fundamental_two_form(s);
  AlphaForm out;
  out.d_eta = residual_result("closed_eta", "d eta", geometry::exterior_derivative(s.eta(), conv).tensor());
  out.d_phi = geometry::exterior_derivative(phi, conv);
  out.eta_wedge_phi = geometry::wedge(s.eta(), phi, conv);
  if (out.eta_wedge_phi.is_zero()) {
    if (!out.d_phi.is_zero()) throw StructureError("d Phi is nonzero but eta ^ Phi vanishes; no alpha exists");
    return out;
  }
  out.alpha = out.d_phi.coefficient / (RationalFunction(2) * out.eta_wedge_phi.coefficient);
  out.alpha_constant = out.alpha->is_constant();
  return out;
}

}  // namespace pcv::structures
