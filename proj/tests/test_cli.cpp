/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "pcv/cli/commands.hpp"

using namespace pcv::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(PCV_FIXTURE_DIR) + "/" + name; }

Manifold load(const std::string& name, std::optional<MetricMode> mode = std::nullopt) {
  LoadOptions o;
  o.metric_mode = mode;
  return load_manifold(fixture(name), o);
}

const Entry& entry(const Report& r, std::string_view section, std::string_view name) {
  const auto* s = r.find(section);
  REQUIRE(s != nullptr);
  const auto* e = find_entry(*s, name);
  REQUIRE_MESSAGE(e != nullptr, name);
  return *e;
}

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + " " + PCV_TOOL_PATH + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  const int raw = pclose(pipe.release());
  return Run{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

const char* kMinimal = R"({
  "schema": 1,
  "coordinates": ["x", "y", "z"],
  "metric": [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "1"]],
  "phi": [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "0"]],
  "xi": ["0", "0", "1"],
  "eta": ["0", "0", "1"],
  "base_point": {"x": "0", "y": "0", "z": "0"}
})";

std::string replaced(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

void check_input_error(const std::string& text, const std::string& fragment) {
  try {
    (void)load_manifold_text(text, "t.json");
    FAIL("expected an input error mentioning " << fragment);
  } catch (const InputError& e) {
    CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
  }
}

}  // namespace

TEST_CASE("loading the fixtures") {
  const auto ex1 = load("ex1.json");
  CHECK(ex1.name == "ex1");
  CHECK(ex1.mode == MetricMode::FromFrame);
  REQUIRE(ex1.notes.size() == 2);
  CHECK(ex1.notes[0] == "metric[x,z]: printed -y/z, frame-reconstructed -2*y/z (using frame-reconstructed)");
  CHECK(ex1.candidates.size() == 1);
  CHECK(ex1.candidates[0].lambda == pcv::ratcas::Rational(2));

  const auto ex2 = load("ex2.json");
  CHECK(ex2.notes.size() == 2);
  CHECK(ex2.candidates[0].mu == pcv::ratcas::Rational(2));

  const auto flat = load("flat.json");
  CHECK(flat.notes.empty());
  CHECK(flat.candidates.size() == 2);
  CHECK(flat.candidates[1].potential.has_value());
}

TEST_CASE("minimal definition without a frame") {
  const auto m = load_manifold_text(kMinimal, "min.json");
  CHECK(m.mode == MetricMode::Printed);
  CHECK(m.name == "min.json");
  CHECK(cmd_classify(m).verdict == "Paracosymplectic");
  CHECK_THROWS_AS(curvature_section(m, true), InputError);
}

TEST_CASE("a potential alone defines the candidate field") {
  const std::string text = replaced(kMinimal, R"("base_point")",
                                    R"("candidates": [{"potential": "(x^2 - y^2 + z^2)/2", "lambda": "2"}], "base_point")");
  const auto m = load_manifold_text(text, "p.json");
  REQUIRE(m.candidates.size() == 1);
  CHECK(m.candidates[0].name == "candidate 1");
  CHECK(m.candidates[0].v == pcv::geometry::VectorField(3, {RationalFunction::variable(0), RationalFunction::variable(1),
                                                           RationalFunction::variable(2)}));
  const auto r = cmd_solitons(m);
  CHECK(entry(r, "solitons", "candidate 1.yamabe").holds == true);
  CHECK(entry(r, "solitons", "candidate 1.gradient").holds == true);
}

TEST_CASE("schema violations") {
  check_input_error("{", "invalid JSON");
  check_input_error(replaced(kMinimal, R"("schema": 1)", R"("schema": 2)"), "unsupported schema");
  check_input_error(replaced(kMinimal, R"("xi": ["0", "0", "1"])", R"("xi": ["0", "0", 1.0])"), "floating-point");
  check_input_error(replaced(kMinimal, R"("xi": ["0", "0", "1"])", R"("xi": ["0", "0", 1])"), "expected a string");
  check_input_error(replaced(kMinimal, R"("xi": ["0", "0", "1"])", R"("xi": ["0", "1"])"), "xi");
  check_input_error(replaced(kMinimal, R"("xi": ["0", "0", "1"])", R"("xi": ["0", "0", "x+"])"), "xi[2]: parse error at offset 2");
  check_input_error(replaced(kMinimal, R"("xi": ["0", "0", "1"])", R"("xi": ["0", "0", "w"])"), "xi[2]");
  check_input_error(replaced(kMinimal, R"("schema": 1)", R"("schema": 1, "extra": 0)"), "unknown key 'extra'");
  check_input_error(replaced(kMinimal, R"("z": "0")", R"("z": "0.5")"), "base_point.z");
  check_input_error(replaced(kMinimal, R"(, "z": "0")", ""), "every coordinate");
  check_input_error(replaced(kMinimal, R"("eta": ["0", "0", "1"])", R"("eta": ["0", "0", "1/z"])"), "pole of eta");
  check_input_error(replaced(kMinimal, R"(["0", "0", "1"]],)", R"(["0", "0", "0"]],)"), "metric");
  check_input_error(replaced(kMinimal, R"("schema": 1)", R"("schema": 1, "metric_mode": "from_frame")"), "needs a \"frame\"");
  check_input_error(replaced(kMinimal, R"("schema": 1)", R"("schema": 1, "metric_mode": "other")"), "unknown metric mode");
  check_input_error(replaced(kMinimal, R"("schema": 1)",
                             R"("schema": 1, "frame": [{"name": "a", "components": ["1", "0", "0"], "sign": 1},
                                {"name": "b", "components": ["2", "0", "0"], "sign": -1},
                                {"name": "c", "components": ["0", "0", "1"], "sign": 1}])"),
                    "frame");
  check_input_error(replaced(kMinimal, R"("schema": 1)",
                             R"("schema": 1, "frame": [{"name": "a", "components": ["1", "0", "0"], "sign": 2},
                                {"name": "b", "components": ["0", "1", "0"], "sign": -1},
                                {"name": "c", "components": ["0", "0", "1"], "sign": 1}])"),
                    "expected 1 or -1");
  check_input_error(replaced(kMinimal, R"("base_point")", R"("candidates": [{"lambda": "1"}], "base_point")"),
                    "needs \"V\" or \"potential\"");
}

TEST_CASE("classification reports") {
  const auto r1 = cmd_classify(load("ex1.json"));
  CHECK(r1.verdict == "ParaSasakian");
  CHECK(r1.passed());
  for (const char* name : {"normal", "compatibility", "paracontact", "h", "frame"}) CHECK(entry(r1, "classification", name).holds == true);

  CHECK(cmd_classify(load("ex2.json")).verdict == "ParaKenmotsu");
  CHECK(cmd_classify(load("flat.json")).verdict == "Paracosymplectic");
}

TEST_CASE("printed metrics are reported with their residuals") {
  const auto r1 = cmd_classify(load("ex1.json", MetricMode::Printed));
  CHECK_FALSE(r1.passed());
  CHECK(r1.metric_mode == "printed");
  const auto& frame = entry(r1, "classification", "frame");
  CHECK(frame.holds == false);
  CHECK(frame.value.find("[e1,e1]: 4*y^2") != std::string::npos);

  const auto r2 = cmd_classify(load("ex2.json", MetricMode::Printed));
  CHECK_FALSE(r2.passed());
  const auto& dual = entry(r2, "classification", "eta_dual");
  CHECK(dual.holds == false);
  CHECK(dual.value.find("[x]: (x + 2*y)/2") != std::string::npos);
}

TEST_CASE("curvature reports") {
  const auto r = cmd_curvature(load("ex2.json"), true);
  CHECK(entry(r, "curvature", "scalar").value == "-6");
  CHECK(entry(r, "curvature", "einstein").value == "Einstein");
  CHECK(entry(r, "curvature", "einstein_alpha").value == "-2");
  CHECK(entry(r, "curvature", "constant_curvature").value == "-1");
  const auto& tables = r.find("curvature")->tables;
  REQUIRE(tables.size() == 2);
  CHECK(tables[0].rows[0] == std::vector<std::string>{"nabla_X X = -xi", "nabla_phiX X = 0", "nabla_xi X = -2phiX"});
  CHECK(tables[1].rows[0] == std::vector<std::string>{"R(X,phiX)xi = 0", "R(phiX,xi)xi = -phiX", "R(X,xi)xi = -X"});

  const auto r1 = cmd_curvature(load("ex1.json"), true);
  CHECK(r1.find("curvature")->tables[1].rows[1] ==
        std::vector<std::string>{"R(e1,e2)e2 = -3e1", "R(e2,xi)e2 = -xi", "R(e1,xi)e2 = 0"});
  CHECK(entry(r1, "curvature", "einstein").value == "proper eta-Einstein");
  CHECK(entry(r1, "curvature", "constant_curvature").value == "none");
}

TEST_CASE("soliton reports") {
  const auto r = cmd_solitons(load("ex2.json"));
  CHECK(r.passed());
  CHECK(entry(r, "solitons", "zero.yamabe").holds == true);
  CHECK(entry(r, "solitons", "zero.lambda").value == "-6 (expanding)");
  CHECK(entry(r, "solitons", "zero.mu_solved").value == "2 (expanding)");
  CHECK(entry(r, "solitons", "zero.lambda_kenmotsu").holds == true);
  CHECK(entry(r, "solitons", "collinear_b1").holds == false);
  CHECK(entry(r, "solitons", "collinear_paths").holds == true);

  const auto r1 = cmd_solitons(load("ex1.json"));
  CHECK(r1.passed());
  for (const char* name : {"xi.yamabe", "xi.killing", "xi.lie_eta", "xi.lie_xi", "xi.lie_phi_form", "xi.lie_g",
                           "xi.laplacian_r", "collinear_b1"}) {
    CHECK_MESSAGE(entry(r1, "solitons", name).holds == true, name);
  }
  CHECK(entry(r1, "solitons", "xi.mu_solved").value == "none");
}

TEST_CASE("identity reports") {
  for (const char* f : {"ex1.json", "ex2.json", "flat.json"}) {
    const auto m = load(f);
    for (auto suite : {Suite::Class, Suite::Dim3, Suite::Conformal}) {
      const auto r = cmd_identities(m, suite);
      CHECK_MESSAGE(r.passed(), f, " ", to_string(suite));
    }
  }
  const auto flat = cmd_identities(load("flat.json"), Suite::Conformal);
  CHECK(entry(flat, "identities: conformal", "dilation.rho").value == "1");

  const auto bad = cmd_identities(load("ex1.json", MetricMode::Printed), Suite::Class);
  CHECK_FALSE(bad.passed());
  CHECK(parse_suite("dim3") == Suite::Dim3);
  CHECK_THROWS_AS(parse_suite("other"), InputError);
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  for (const char* f : {"ex1.json", "ex2.json", "flat.json"}) {
    for (auto mode : {MetricMode::FromFrame, MetricMode::Printed}) {
      const auto m = load(f, mode);
      const auto r = cmd_report(m);
      const auto text = to_json(r);
      CHECK(report_from_json(text) == r);
      CHECK(to_json(report_from_json(text)) == text);
      CHECK(to_json(cmd_report(load(f, mode))) == text);
      CHECK(to_text(cmd_report(load(f, mode))) == to_text(r));
    }
  }
  CHECK_THROWS_AS(report_from_json("{}"), std::invalid_argument);
}

TEST_CASE("command line") {
  const std::string dir = PCV_FIXTURE_DIR;
  auto r = run("classify " + dir + "/ex1.json");
  CHECK(r.status == 0);
  CHECK(r.out.find("class: ParaSasakian") != std::string::npos);

  r = run("curvature " + dir + "/ex2.json --frame");
  CHECK(r.status == 0);
  CHECK(r.out.find("R(X,xi)xi = -X") != std::string::npos);
  CHECK(r.out.find("r = ") == std::string::npos);
  CHECK(r.out.find("scalar              -6") != std::string::npos);

  r = run("solitons " + dir + "/ex2.json");
  CHECK(r.status == 0);
  CHECK(r.out.find("-6 (expanding)") != std::string::npos);
  CHECK(r.out.find("zero.mu_solved         2 (expanding)") != std::string::npos);

  CHECK(run("identities --suite class " + dir + "/flat.json").status == 0);
  CHECK(run("identities --suite dim3 " + dir + "/ex2.json").status == 0);
  CHECK(run("identities --suite conformal " + dir + "/flat.json").status == 0);
  CHECK(run("report --format json " + dir + "/ex1.json").status == 0);

  r = run("classify --metric-mode printed " + dir + "/ex1.json");
  CHECK(r.status == 1);
  CHECK(r.out.find("[e1,e1]: 4*y^2") != std::string::npos);
  CHECK(run("report --metric-mode printed " + dir + "/ex2.json").status == 1);

  const std::string bad = "/tmp/pcv_cli_bad.json";
  std::ofstream(bad) << replaced(kMinimal, R"("xi": ["0", "0", "1"])", R"("xi": ["0", "0", "x+"])");
  r = run("classify " + bad);
  CHECK(r.status == 2);
  CHECK(r.out.find("parse error") != std::string::npos);
  CHECK(run("classify /nonexistent/file.json").status == 2);
  CHECK(run("frobnicate " + dir + "/ex1.json").status == 2);
  CHECK(run("identities --suite other " + dir + "/ex1.json").status == 2);
  CHECK(run("curvature --frame " + bad).status == 2);

  r = run("classify " + dir + "/ex1.json", "PCV_CONVENTION_KAPPA=1");
  CHECK(r.status == 0);
  CHECK(r.out.find("kappa=1 wedge=1") != std::string::npos);
  CHECK(r.out.find("class: AlmostParacontactMetric") != std::string::npos);
  CHECK(run("classify " + dir + "/ex1.json", "PCV_CONVENTION_KAPPA=3").status == 2);

  const auto a = run("report --format json " + dir + "/flat.json");
  const auto b = run("report --format json " + dir + "/flat.json");
  CHECK(a.out == b.out);
  CHECK(report_from_json(a.out) == cmd_report(load("flat.json")));
}
