/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>

#include "pcv/structures/structure.hpp"

namespace pcv::structures {

/// eta(xi) = 1, phi^2 = I - eta (x) xi, phi xi = 0, eta o phi = 0 and
/// trace phi = 0. In dimension 3 the trace condition is what makes the +1 and
/// -1 eigendistributions of phi on ker eta one-dimensional each.
AxiomReport check_almost_paracontact(const ParacontactStructure& s);

/// g(phi X, phi Y) = -g(X, Y) + eta(X) eta(Y), eta = g(., xi), signature
/// (n+1, n) at the base point, and pseudo-orthonormality of the declared frame
/// when there is one. Throws ratcas::PoleError if g has a pole at the base point.
AxiomReport check_metric_compatibility(const ParacontactStructure& s);

/// Phi(X, Y) = g(X, phi Y)
Tensor02 fundamental_two_form(const ParacontactStructure& s);

/// d eta = Phi under the structure's convention.
AxiomReport check_paracontact_metric(const ParacontactStructure& s);

struct HOperator {
  /// h = 1/2 L_xi phi
  Tensor11 h;
  /// h xi, trace h, trace(h phi), h phi + phi h, self-adjointness of h and
  /// nabla xi = -phi + phi h. The last one is only expected on paracontact
  /// metric structures.
  AxiomReport checks;
};

HOperator h_operator(const ParacontactStructure& s);

/// [phi, phi](X, Y) = phi^2 [X, Y] + [phi X, phi Y] - phi [phi X, Y] - phi [X, phi Y]
geometry::Tensor12 nijenhuis_torsion(const ParacontactStructure& s);

/// N_phi = [phi, phi] - 2 d eta (x) xi
AxiomReport normality_check(const ParacontactStructure& s);

struct AlphaForm {
  AxiomResult d_eta;
  geometry::ThreeForm d_phi;
  geometry::ThreeForm eta_wedge_phi;
  /// Solution of d Phi = 2 alpha eta ^ Phi; empty when eta ^ Phi = 0 = d Phi.
  std::optional<RationalFunction> alpha;
  bool alpha_constant = false;
};

/// Throws StructureError when eta ^ Phi = 0 but d Phi != 0.
AlphaForm alpha_form_check(const ParacontactStructure& s);

}  // namespace pcv::structures
