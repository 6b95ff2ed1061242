/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/structures/classify.hpp"

namespace pcv::structures {

using geometry::apply;
using geometry::compose;
using geometry::coordinate_field;
using geometry::outer;

namespace {

struct KindName {
  ClassKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {ClassKind::ParaSasakian, "para-Sasakian"},
    {ClassKind::Paracosymplectic, "paracosymplectic"},
    {ClassKind::ParaKenmotsu, "para-Kenmotsu"},
    {ClassKind::KParacontact, "K-paracontact"},
    {ClassKind::ParacontactMetric, "paracontact metric"},
    {ClassKind::AlmostAlphaParacosymplectic, "almost alpha-paracosymplectic"},
    {ClassKind::AlmostParacontactMetric, "almost paracontact metric"},
    {ClassKind::Invalid, "invalid"},
};

}  // namespace

std::string to_string(ClassKind kind) {
  for (const auto& k : kKindNames)
    if (k.kind == kind) return k.name;
  return "unknown";
}

std::string to_string(const StructureClass& c, const CoordinateSystem& coords) {
  std::string out = to_string(c.kind);
  if (c.alpha) out += " (alpha = " + ratcas::to_string(*c.alpha, coords) + ")";
  if (!c.failed.empty()) {
    out += " (failed:";
    for (const auto& f : c.failed) out += " " + f;
    out += ")";
  }
  return out;
}

ClassKind parse_class_kind(std::string_view name) {
  for (const auto& k : kKindNames)
    if (name == k.name) return k.kind;
  throw std::invalid_argument("unknown structure class '" + std::string(name) + "'");
}

Classification classify(const ParacontactStructure& s) {
  Classification out;
  out.report = check_almost_paracontact(s);
  out.report.append(check_metric_compatibility(s));
  if (!out.report.all_hold()) {
    out.verdict = StructureClass{ClassKind::Invalid, std::nullopt, out.report.failed()};
    return out;
  }

  const AxiomReport contact = check_paracontact_metric(s);
  const AxiomReport normal = normality_check(s);
  out.report.append(contact);
  out.report.append(normal);
  out.h = h_operator(s);
  out.report.append(out.h->checks);
  out.alpha = alpha_form_check(s);
  out.report.items.push_back(out.alpha->d_eta);

  const bool is_contact = contact.all_hold();
  const bool is_normal = normal.all_hold();
  auto& verdict = out.verdict;
  if (is_contact && is_normal) {
    verdict.kind = ClassKind::ParaSasakian;
  } else if (out.alpha->d_eta.holds) {
    const auto& alpha = out.alpha->alpha;
    if (is_normal && alpha && *alpha == RationalFunction(0)) {
      verdict.kind = ClassKind::Paracosymplectic;
    } else if (is_normal && alpha && *alpha == RationalFunction(1)) {
      verdict.kind = ClassKind::ParaKenmotsu;
    } else {
      verdict.kind = ClassKind::AlmostAlphaParacosymplectic;
      verdict.alpha = alpha;
    }
  } else if (is_contact) {
    verdict.kind = out.h->h.is_zero() ? ClassKind::KParacontact : ClassKind::ParacontactMetric;
  } else {
    verdict.kind = ClassKind::AlmostParacontactMetric;
  }
  return out;
}

namespace {

// Residual builders over coordinate fields. R(l, i, j, k) = (R(d_i, d_j) d_k)^l.

// R(d_i, d_j) xi - expected(i, j), with expected given per pair.
template <class F>
geometry::Tensor12 curvature_xi_residual(const ParacontactStructure& s, F expected) {
  const auto n = s.dim();
  const auto& rm = s.curvature().riemann;
  geometry::Tensor12 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const VectorField v = apply(rm, coordinate_field(n, i), coordinate_field(n, j), s.xi()) - expected(i, j);
      for (std::size_t l = 0; l < n; ++l) t(l, i, j) = v(l);
    }
  return t;
}

// (nabla_{d_i} phi) d_j - expected(i, j)
template <class F>
geometry::Tensor12 nabla_phi_residual(const ParacontactStructure& s, F expected) {
  const auto n = s.dim();
  const auto nphi = geometry::covariant_derivative(s.phi(), s.curvature().gamma);
  geometry::Tensor12 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const VectorField e = expected(i, j);
      for (std::size_t l = 0; l < n; ++l) t(l, i, j) = nphi(l, i, j) - e(l);
    }
  return t;
}

Tensor11 nabla_xi(const ParacontactStructure& s) {
  return Tensor11(geometry::covariant_derivative(s.xi(), s.curvature().gamma).tensor());
}

VectorField scaled(const VectorField& v, const RationalFunction& f) { return f.is_zero() ? VectorField(v.dim()) : v * f; }

VectorField column(const Tensor11& a, std::size_t j) {
  VectorField v(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) v(i) = a(i, j);
  return v;
}

// S(X, xi) + (n - 1) eta(X), with n the manifold dimension.
AxiomResult ricci_xi_result(const ParacontactStructure& s, const RationalFunction& factor) {
  const auto n = s.dim();
  OneForm w(n);
  for (std::size_t i = 0; i < n; ++i)
    w(i) = apply(s.curvature().ricci, coordinate_field(n, i), s.xi()) + factor * s.eta()(i);
  return residual_result("ricci_xi", factor.is_zero() ? "S(X, xi)" : "S(X, xi) + (n - 1) eta(X)", w.tensor());
}

}  // namespace

AxiomReport structure_identity_suite(const ParacontactStructure& s, ClassKind kind) {
  const auto verdict = classify(s).verdict;
  if (verdict.kind != kind) {
    throw StructureError("structure classifies as " + to_string(verdict.kind) + ", not " + to_string(kind));
  }
  const auto n = s.dim();
  const auto& g = s.g().g();
  const auto& eta = s.eta();
  const auto e = [n](std::size_t i) { return coordinate_field(n, i); };
  const RationalFunction n_minus_one(static_cast<long>(n) - 1);

  AxiomReport r;
  switch (kind) {
    case ClassKind::ParaSasakian: {
      r.items.push_back(residual_result(
          "curvature_xi", "R(X, Y) xi + eta(Y) X - eta(X) Y",
          curvature_xi_residual(s, [&](std::size_t i, std::size_t j) {
            return scaled(e(j), eta(i)) - scaled(e(i), eta(j));
          }).tensor()));
      r.items.push_back(residual_result(
          "nabla_phi", "(nabla_X phi) Y + g(X, Y) xi - eta(Y) X",
          nabla_phi_residual(s, [&](std::size_t i, std::size_t j) {
            return scaled(e(i), eta(j)) - scaled(s.xi(), g(i, j));
          }).tensor()));
      r.items.push_back(residual_result("nabla_xi", "nabla_X xi + phi X", (nabla_xi(s) + s.phi()).tensor()));
      geometry::Tensor12 rx(n);
      const auto& rm = s.curvature().riemann;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const VectorField v =
              apply(rm, s.xi(), e(i), e(j)) + scaled(s.xi(), g(i, j)) - scaled(e(i), eta(j));
          for (std::size_t l = 0; l < n; ++l) rx(l, i, j) = v(l);
        }
      r.items.push_back(residual_result("curvature_xi_x", "R(xi, X) Y + g(X, Y) xi - eta(Y) X", rx.tensor()));
      r.items.push_back(ricci_xi_result(s, n_minus_one));
      break;
    }
    case ClassKind::Paracosymplectic: {
      r.items.push_back(residual_result(
          "curvature_xi", "R(X, Y) xi",
          curvature_xi_residual(s, [&](std::size_t, std::size_t) { return VectorField(n); }).tensor()));
      r.items.push_back(residual_result(
          "nabla_phi", "(nabla_X phi) Y",
          nabla_phi_residual(s, [&](std::size_t, std::size_t) { return VectorField(n); }).tensor()));
      r.items.push_back(residual_result("nabla_xi", "nabla_X xi", nabla_xi(s).tensor()));
      r.items.push_back(ricci_xi_result(s, RationalFunction(0)));
      break;
    }
    case ClassKind::ParaKenmotsu: {
      r.items.push_back(residual_result(
          "curvature_xi", "R(X, Y) xi - eta(X) Y + eta(Y) X",
          curvature_xi_residual(s, [&](std::size_t i, std::size_t j) {
            return scaled(e(j), eta(i)) - scaled(e(i), eta(j));
          }).tensor()));
      const Tensor02 phi_form = fundamental_two_form(s);
      r.items.push_back(residual_result(
          "nabla_phi", "(nabla_X phi) Y - g(phi X, Y) xi + eta(Y) phi X",
          nabla_phi_residual(s, [&](std::size_t i, std::size_t j) {
            // g(phi d_i, d_j) = Phi(d_j, d_i)
            return scaled(s.xi(), phi_form(j, i)) - scaled(column(s.phi(), i), eta(j));
          }).tensor()));
      r.items.push_back(residual_result("nabla_xi", "nabla_X xi - X + eta(X) xi",
                                        (nabla_xi(s) - geometry::identity(n) + outer(eta, s.xi())).tensor()));
      r.items.push_back(ricci_xi_result(s, n_minus_one));
      break;
    }
    default:
      throw StructureError("no identity suite for class " + to_string(kind));
  }
  return r;
}

geometry::ExteriorConvention calibrate_convention(const ParacontactStructure& contact_reference,
                                                  const ParacontactStructure& kenmotsu_reference,
                                                  const std::vector<Rational>& candidates) {
  std::vector<geometry::ExteriorConvention> fits;
  for (const auto& kappa : candidates) {
    const auto conv = geometry::convention_with_kappa(kappa);
    const auto a = contact_reference.with_convention(conv);
    if (!check_paracontact_metric(a).all_hold() || !normality_check(a).all_hold()) continue;
    const auto b = kenmotsu_reference.with_convention(conv);
    const Tensor02 phi = fundamental_two_form(b);
    const auto lhs = geometry::exterior_derivative(phi, conv).coefficient;
    const auto rhs = RationalFunction(2) * geometry::wedge(b.eta(), phi, conv).coefficient;
    if (lhs != rhs || lhs.is_zero()) continue;
    fits.push_back(conv);
  }
  if (fits.size() != 1) {
    throw StructureError(std::to_string(fits.size()) + " candidate conventions fit the reference structures");
  }
  return fits.front();
}

}  // namespace pcv::structures
