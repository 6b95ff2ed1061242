/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcv/structures/axioms.hpp"

namespace pcv::structures {

enum class ClassKind {
  ParaSasakian,
  Paracosymplectic,
  ParaKenmotsu,
  KParacontact,
  ParacontactMetric,
  AlmostAlphaParacosymplectic,
  AlmostParacontactMetric,
  Invalid,
};

struct StructureClass {
  ClassKind kind = ClassKind::Invalid;
  /// Set for AlmostAlphaParacosymplectic.
  std::optional<RationalFunction> alpha;
  /// Set for Invalid.
  std::vector<std::string> failed;

  friend bool operator==(const StructureClass&, const StructureClass&) = default;
};

std::string to_string(ClassKind kind);
std::string to_string(const StructureClass& c, const CoordinateSystem& coords);
/// Inverse of to_string(ClassKind); throws std::invalid_argument.
ClassKind parse_class_kind(std::string_view name);

struct Classification {
  StructureClass verdict;
  /// Every check that was run, in a fixed order.
  AxiomReport report;
  std::optional<HOperator> h;
  std::optional<AlphaForm> alpha;
};

Classification classify(const ParacontactStructure& s);

/// Identities every structure of the given class satisfies. Throws
/// StructureError when s does not classify as `kind` or the class has no suite
/// (only para-Sasakian, paracosymplectic and para-Kenmotsu do).
AxiomReport structure_identity_suite(const ParacontactStructure& s, ClassKind kind);

/// The candidate exterior-derivative factor (with wedge factor equal to it)
/// under which `contact_reference` satisfies d eta = Phi and N_phi = 0 and
/// `kenmotsu_reference` satisfies d Phi = 2 eta ^ Phi. Throws StructureError
/// unless exactly one candidate fits.
geometry::ExteriorConvention calibrate_convention(const ParacontactStructure& contact_reference,
                                                  const ParacontactStructure& kenmotsu_reference,
                                                  const std::vector<Rational>& candidates = {Rational(1),
                                                                                             Rational(1, 2)});

}  // namespace pcv::structures
