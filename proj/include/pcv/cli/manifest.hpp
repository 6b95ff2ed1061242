/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcv/structures/structure.hpp"

namespace pcv::cli {

using geometry::VectorField;
using ratcas::Rational;
using ratcas::RationalFunction;
using structures::ParacontactStructure;

/// Anything wrong with the input file: I/O, JSON syntax, schema, expression
/// syntax, inconsistent dimensions, degenerate metric or frame, poles at the
/// base point.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MetricMode { FromFrame, Printed };

std::string to_string(MetricMode m);
/// "from_frame" or "printed"; throws InputError.
MetricMode parse_metric_mode(std::string_view s);

struct Candidate {
  std::string name;
  VectorField v;
  std::optional<Rational> lambda;
  std::optional<Rational> mu;
  std::optional<RationalFunction> potential;
};

struct Manifold {
  std::string name;
  std::string source;
  MetricMode mode = MetricMode::FromFrame;
  ParacontactStructure structure;
  std::vector<Candidate> candidates;
  /// Mismatches between printed and reconstructed data, in file order.
  std::vector<std::string> notes;
};

struct LoadOptions {
  /// Overrides the file's "metric_mode".
  std::optional<MetricMode> metric_mode;
  geometry::ExteriorConvention convention = geometry::default_convention();
};

/// Parses a schema-1 manifold definition. `source` names the input in
/// messages. Throws InputError.
Manifold load_manifold_text(std::string_view text, const std::string& source, const LoadOptions& options = {});
Manifold load_manifold(const std::filesystem::path& path, const LoadOptions& options = {});

}  // namespace pcv::cli
