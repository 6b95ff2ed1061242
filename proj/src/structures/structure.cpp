/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/structures/structure.hpp"

#include <algorithm>

namespace pcv::structures {

ParacontactStructure::ParacontactStructure(CoordinateSystem coords, Tensor11 phi, VectorField xi, OneForm eta,
                                           Tensor02 g, std::vector<Rational> base_point, std::optional<Frame> frame,
                                           ExteriorConvention convention)
    : coords_(std::move(coords)),
      phi_(std::move(phi)),
      xi_(std::move(xi)),
      eta_(std::move(eta)),
      g_(std::move(g)),
      base_point_(std::move(base_point)),
      frame_(std::move(frame)),
      convention_(convention),
      curvature_(geometry::curvature(g_)) {
  const auto n = coords_.size();
  if (phi_.dim() != n || xi_.dim() != n || eta_.dim() != n || g_.dim() != n) {
    throw std::invalid_argument("structure tensors do not match the chart dimension");
  }
  if (base_point_.size() != n) throw std::invalid_argument("base point does not match the chart dimension");
  if (frame_ && frame_->size() != n) throw std::invalid_argument("frame size does not match the chart dimension");
}

ParacontactStructure ParacontactStructure::with_convention(const ExteriorConvention& convention) const {
  ParacontactStructure copy = *this;
  copy.convention_ = convention;
  return copy;
}

AxiomResult residual_result(std::string name, std::string formula, Tensor residual) {
  AxiomResult r;
  r.name = std::move(name);
  r.formula = std::move(formula);
  r.holds = residual.is_zero();
  r.residual = std::move(residual);
  return r;
}

AxiomResult residual_result(std::string name, std::string formula, const RationalFunction& scalar, std::size_t dim) {
  return residual_result(std::move(name), std::move(formula), Tensor(dim, 0, 0, {scalar}));
}

bool AxiomReport::all_hold() const {
  return std::all_of(items.begin(), items.end(), [](const auto& r) { return r.holds; });
}

std::vector<std::string> AxiomReport::failed() const {
  std::vector<std::string> out;
  for (const auto& r : items)
    if (!r.holds) out.push_back(r.name);
  return out;
}

const AxiomResult* AxiomReport::find(std::string_view name) const {
  for (const auto& r : items)
    if (r.name == name) return &r;
  return nullptr;
}

void AxiomReport::append(const AxiomReport& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

std::string describe_residual(const AxiomResult& r, const CoordinateSystem& coords) {
  if (!r.residual) return r.detail;
  if (r.labels.empty()) return geometry::describe(*r.residual, coords);
  return geometry::describe(*r.residual, coords, r.labels);
}

}  // namespace pcv::structures
