/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcv/geometry/calculus.hpp"
#include "pcv/geometry/frame.hpp"
#include "pcv/geometry/metric.hpp"

namespace pcv::structures {

using geometry::Curvature;
using geometry::ExteriorConvention;
using geometry::Frame;
using geometry::Metric;
using geometry::OneForm;
using geometry::Tensor;
using geometry::Tensor02;
using geometry::Tensor11;
using geometry::VectorField;
using ratcas::CoordinateSystem;
using ratcas::Rational;
using ratcas::RationalFunction;

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (phi, xi, eta, g) on a coordinate chart. Nothing about the axioms is
/// assumed; the checks in axioms.hpp report on them.
class ParacontactStructure {
 public:
  /// Throws std::invalid_argument on dimension mismatches and
  /// geometry::DegenerateMetric when det g vanishes identically.
  ParacontactStructure(CoordinateSystem coords, Tensor11 phi, VectorField xi, OneForm eta, Tensor02 g,
                       std::vector<Rational> base_point, std::optional<Frame> frame = std::nullopt,
                       ExteriorConvention convention = geometry::default_convention());

  std::size_t dim() const { return coords_.size(); }
  const CoordinateSystem& coords() const { return coords_; }
  const Tensor11& phi() const { return phi_; }
  const VectorField& xi() const { return xi_; }
  const OneForm& eta() const { return eta_; }
  const Metric& g() const { return g_; }
  const std::vector<Rational>& base_point() const { return base_point_; }
  const std::optional<Frame>& frame() const { return frame_; }
  const ExteriorConvention& convention() const { return convention_; }
  const Curvature& curvature() const { return curvature_; }

  /// Same data under another exterior-derivative convention.
  ParacontactStructure with_convention(const ExteriorConvention& convention) const;

 private:
  CoordinateSystem coords_;
  Tensor11 phi_;
  VectorField xi_;
  OneForm eta_;
  Metric g_;
  std::vector<Rational> base_point_;
  std::optional<Frame> frame_;
  ExteriorConvention convention_;
  Curvature curvature_;
};

/// One named check. When a residual tensor is present, holds is exactly
/// "residual is the zero tensor".
struct AxiomResult {
  std::string name;
  std::string formula;
  std::optional<Tensor> residual;
  bool holds = false;
  std::string detail;
  /// Index names for printing the residual; empty means the chart coordinates.
  std::vector<std::string> labels;
};

AxiomResult residual_result(std::string name, std::string formula, Tensor residual);
AxiomResult residual_result(std::string name, std::string formula, const RationalFunction& scalar, std::size_t dim);

struct AxiomReport {
  std::vector<AxiomResult> items;

  bool all_hold() const;
  std::vector<std::string> failed() const;
  /// nullptr when absent.
  const AxiomResult* find(std::string_view name) const;
  void append(const AxiomReport& other);
};

/// "0" or a component listing of the residual.
std::string describe_residual(const AxiomResult& r, const CoordinateSystem& coords);

}  // namespace pcv::structures
