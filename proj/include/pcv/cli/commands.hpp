/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <string_view>

#include "pcv/cli/manifest.hpp"
#include "pcv/cli/report.hpp"
#include "pcv/structures/classify.hpp"

namespace pcv::cli {

enum class Suite { Class, Dim3, Conformal };

/// "class", "dim3" or "conformal"; throws InputError.
Suite parse_suite(std::string_view s);
std::string to_string(Suite s);

/// Report identifier of a class, e.g. "ParaSasakian".
std::string class_identifier(structures::ClassKind kind);

/// Axiom table; structural axioms (almost paracontact, compatibility) are required.
Section classification_section(const Manifold& m);
/// Christoffel symbols, S, Q, r, Einstein and constant-curvature data; with
/// `frame_tables`, the connection and curvature tables in the declared frame.
/// Throws InputError when frame tables are requested without a frame.
Section curvature_section(const Manifold& m, bool frame_tables);
/// Per-candidate soliton checks, solver outputs, Killing and automorphism
/// checks, and the collinear b = 1 contrast.
Section soliton_section(const Manifold& m);
Section identity_section(const Manifold& m, Suite suite);

Report cmd_classify(const Manifold& m);
Report cmd_curvature(const Manifold& m, bool frame_tables);
Report cmd_solitons(const Manifold& m);
Report cmd_identities(const Manifold& m, Suite suite);
/// Everything above; frame tables are included when the input has a frame.
Report cmd_report(const Manifold& m);

}  // namespace pcv::cli
