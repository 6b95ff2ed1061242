/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pcv/cli/commands.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitResidual = 1;
constexpr int kExitInput = 2;

pcv::geometry::ExteriorConvention convention_from_env() {
  const char* value = std::getenv("PCV_CONVENTION_KAPPA");
  if (value == nullptr || *value == '\0') return pcv::geometry::default_convention();
  const std::string v = value;
  if (v == "1") return pcv::geometry::convention_with_kappa(pcv::ratcas::Rational(1));
  if (v == "1/2") return pcv::geometry::convention_with_kappa(pcv::ratcas::Rational(1, 2));
  throw pcv::cli::InputError("PCV_CONVENTION_KAPPA must be 1 or 1/2, got '" + v + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of almost paracontact metric structures, their curvature and solitons."};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  std::string metric_mode;
  bool frame = false;
  std::string suite = "class";

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", path, "Manifold definition (JSON, schema 1)")->required();
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--metric-mode", metric_mode, "Override the file's metric mode")
        ->check(CLI::IsMember({"from_frame", "printed"}));
  };

  auto* classify = app.add_subcommand("classify", "Check the axioms and classify the structure");
  auto* curvature = app.add_subcommand("curvature", "Christoffel symbols, S, Q, r, Einstein and constant-curvature data");
  curvature->add_flag("--frame", frame, "Also print the connection and curvature tables in the declared frame");
  auto* solitons = app.add_subcommand("solitons", "Check the Yamabe and Ricci soliton candidates");
  auto* identities = app.add_subcommand("identities", "Evaluate an identity suite");
  identities->add_option("--suite", suite, "Suite to evaluate")->check(CLI::IsMember({"class", "dim3", "conformal"}));
  auto* report = app.add_subcommand("report", "Everything above");
  for (auto* cmd : {classify, curvature, solitons, identities, report}) add_common(cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    pcv::cli::LoadOptions options;
    options.convention = convention_from_env();
    if (!metric_mode.empty()) options.metric_mode = pcv::cli::parse_metric_mode(metric_mode);
    const auto m = pcv::cli::load_manifold(path, options);

    pcv::cli::Report r;
    if (classify->parsed()) {
      r = pcv::cli::cmd_classify(m);
    } else if (curvature->parsed()) {
      r = pcv::cli::cmd_curvature(m, frame);
    } else if (solitons->parsed()) {
      r = pcv::cli::cmd_solitons(m);
    } else if (identities->parsed()) {
      r = pcv::cli::cmd_identities(m, pcv::cli::parse_suite(suite));
    } else {
      r = pcv::cli::cmd_report(m);
    }
    std::cout << (format == "json" ? pcv::cli::to_json(r) : pcv::cli::to_text(r));
    return r.passed() ? kExitPass : kExitResidual;
  } catch (const pcv::cli::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
