/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// Prints one PASS/FAIL line per acceptance criterion; every comparison is
// exact. Exits non-zero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pcv/analysis/curvature_checks.hpp"
#include "pcv/analysis/solitons.hpp"
#include "pcv/cli/commands.hpp"
#include "support/cas_properties.hpp"

namespace {

using namespace pcv;
using geometry::Frame;
using ratcas::Rational;
using ratcas::RationalFunction;

constexpr double kTimeLimitSeconds = 10.0;

// Collects failed expectations for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

cli::Manifold fixture(const std::string& name, cli::MetricMode mode = cli::MetricMode::FromFrame) {
  cli::LoadOptions o;
  o.metric_mode = mode;
  return cli::load_manifold(std::string(PCV_FIXTURE_DIR) + "/" + name, o);
}

RationalFunction expr(const std::string& s) { return ratcas::parse_expr(s, testing::property_coords()); }

std::vector<RationalFunction> c3(int a, int b, int c) { return {RationalFunction(a), RationalFunction(b), RationalFunction(c)}; }

struct FrameEntry {
  std::string label;
  std::size_t a, b, c;
  std::vector<RationalFunction> expected;
};

void expect_curvature(Checker& ck, const structures::ParacontactStructure& s, const std::vector<FrameEntry>& entries) {
  const auto& f = *s.frame();
  const auto t = geometry::curvature_table(f, s.curvature().riemann);
  for (const auto& e : entries) ck.expect(t[e.a][e.b][e.c] == e.expected, e.label);
}

void expect_all_hold(Checker& ck, const structures::AxiomReport& r, const std::string& where) {
  for (const auto& item : r.items) ck.expect(item.holds, where + ": " + item.name);
}

bool entries_hold(const cli::Report& r, bool required_only) {
  for (const auto& s : r.sections)
    for (const auto& e : s.entries)
      if ((!required_only || e.required) && e.holds == false) return false;
  return true;
}

// ---------------------------------------------------------------------------

void criterion1(Checker& ck) {
  const auto m = fixture("ex1.json");
  const auto r = cli::cmd_classify(m);
  ck.expect(r.verdict == "ParaSasakian", "verdict is " + r.verdict);
  ck.expect(r.passed(), "structural axioms");
  const auto* s = r.find("classification");
  for (const char* name : {"eta_xi", "phi_squared", "phi_xi", "eta_phi", "trace_phi", "compatibility", "eta_dual",
                           "signature", "frame", "paracontact", "normal", "h", "h_xi", "trace_h", "trace_h_phi",
                           "h_anticommutes", "h_self_adjoint", "nabla_xi"}) {
    const auto* e = cli::find_entry(*s, name);
    ck.expect(e != nullptr && e->holds == true && (e->value == "0" || std::string(name) == "signature"), name);
  }
  ck.expect(structures::h_operator(m.structure).h.is_zero(), "h = 0");
  ck.expect(structures::nijenhuis_torsion(m.structure).is_zero() == false, "[phi, phi] is nonzero before the d eta term");
}

void criterion2(Checker& ck) {
  const auto m = fixture("ex1.json");
  const auto& s = m.structure;
  const auto& f = *s.frame();
  // Frame order: e1, e2, xi.
  const auto conn = geometry::connection_table(f, s.curvature().gamma);
  const std::vector<FrameEntry> connection = {
      {"nabla_e1 e1 = 0", 0, 0, 0, c3(0, 0, 0)},   {"nabla_e2 e1 = xi", 1, 0, 0, c3(0, 0, 1)},
      {"nabla_xi e1 = -e2", 2, 0, 0, c3(0, -1, 0)}, {"nabla_e1 e2 = -xi", 0, 1, 0, c3(0, 0, -1)},
      {"nabla_e2 e2 = 0", 1, 1, 0, c3(0, 0, 0)},   {"nabla_xi e2 = -e1", 2, 1, 0, c3(-1, 0, 0)},
      {"nabla_e1 xi = -e2", 0, 2, 0, c3(0, -1, 0)}, {"nabla_e2 xi = -e1", 1, 2, 0, c3(-1, 0, 0)},
      {"nabla_xi xi = 0", 2, 2, 0, c3(0, 0, 0)},
  };
  for (const auto& e : connection) ck.expect(conn[e.a][e.b] == e.expected, e.label);

  expect_curvature(ck, s,
                   {
                       {"R(e1,e2)xi = 0", 0, 1, 2, c3(0, 0, 0)},
                       {"R(e2,xi)xi = -e2", 1, 2, 2, c3(0, -1, 0)},
                       {"R(e1,xi)xi = -e1", 0, 2, 2, c3(-1, 0, 0)},
                       {"R(e1,e2)e2 = -3e1", 0, 1, 1, c3(-3, 0, 0)},
                       {"R(e2,xi)e2 = -xi", 1, 2, 1, c3(0, 0, -1)},
                       {"R(e1,xi)e2 = 0", 0, 2, 1, c3(0, 0, 0)},
                       {"R(e1,e2)e1 = -3e2", 0, 1, 0, c3(0, -3, 0)},
                       {"R(e2,xi)e1 = 0", 1, 2, 0, c3(0, 0, 0)},
                       {"R(e1,xi)e1 = xi", 0, 2, 0, c3(0, 0, 1)},
                   });
  ck.expect(s.curvature().scalar == RationalFunction(2), "r = 2");
}

void criterion3(Checker& ck) {
  const auto m = fixture("ex1.json");
  const auto& s = m.structure;
  const auto y = analysis::yamabe_check(s, s.xi(), Rational(2));
  ck.expect(y.holds, "(xi, 2) is a Yamabe soliton");
  ck.expect(analysis::killing_check(s, s.xi()).holds, "xi is Killing");
  const auto aut = analysis::automorphism_check(s, s.xi());
  ck.expect(aut.items.size() == 4, "four automorphism residuals");
  expect_all_hold(ck, aut, "automorphism");
  ck.expect(s.curvature().scalar != RationalFunction(-6), "r != -6");
  const auto suite = analysis::soliton_consequence_suite(s, s.xi(), Rational(2));
  ck.expect(suite.find("eta_lie_xi") && suite.find("lie_eta_xi") && suite.find("laplacian_r"), "consequence items present");
  expect_all_hold(ck, suite, "consequence");
}

void criterion4(Checker& ck) {
  const auto m = fixture("ex2.json");
  const auto& s = m.structure;
  ck.expect(cli::cmd_classify(m).verdict == "ParaKenmotsu", "classified as para-Kenmotsu");
  // Frame order: X, phiX, xi.
  expect_curvature(ck, s,
                   {
                       {"R(X,phiX)xi = 0", 0, 1, 2, c3(0, 0, 0)},
                       {"R(phiX,xi)xi = -phiX", 1, 2, 2, c3(0, -1, 0)},
                       {"R(X,xi)xi = -X", 0, 2, 2, c3(-1, 0, 0)},
                       {"R(X,phiX)phiX = X", 0, 1, 1, c3(1, 0, 0)},
                       {"R(phiX,xi)phiX = -xi", 1, 2, 1, c3(0, 0, -1)},
                       {"R(X,xi)phiX = 0", 0, 2, 1, c3(0, 0, 0)},
                       {"R(X,phiX)X = phiX", 0, 1, 0, c3(0, 1, 0)},
                       {"R(phiX,xi)X = 0", 1, 2, 0, c3(0, 0, 0)},
                       {"R(X,xi)X = xi", 0, 2, 0, c3(0, 0, 1)},
                   });
  ck.expect(s.curvature().scalar == RationalFunction(-6), "r = -6");
  const auto e = analysis::einstein_classify(s);
  ck.expect(e.verdict == analysis::EinsteinVerdict::Einstein && e.alpha == RationalFunction(-2), "Einstein with alpha = -2");
  ck.expect(analysis::constant_curvature_solve(s).c == Rational(-1), "c = -1");
  const geometry::VectorField zero(3);
  const auto lambda = analysis::yamabe_solve_lambda(s, zero);
  ck.expect(lambda == Rational(-6), "lambda = -6");
  ck.expect(lambda && analysis::yamabe_sign(*lambda) == analysis::SignClass::Expanding, "expanding");
  ck.expect(analysis::ricci_solve_mu(s, zero) == Rational(2), "mu = 2");
  const auto xr = analysis::xi_scalar_derivative_check(s);
  ck.expect(xr.holds && xr.formula == "xi(r) + 2(r + 6)", "xi(r) + 2(r + 6) = 0");
}

void criterion5(Checker& ck) {
  const auto m = fixture("flat.json");
  const auto& s = m.structure;
  ck.expect(cli::cmd_classify(m).verdict == "Paracosymplectic", "classified as paracosymplectic");
  const auto suite = structures::structure_identity_suite(s, structures::ClassKind::Paracosymplectic);
  expect_all_hold(ck, suite, "identity");
  ck.expect(analysis::ricci_closed_form_check(s).holds, "S = (r/2)(g - eta (x) eta)");
  ck.expect(analysis::xi_scalar_derivative_check(s).holds, "xi(r) = 0");
  ck.expect(s.curvature().scalar.is_zero(), "r = 0");
  ck.expect(analysis::einstein_classify(s).verdict == analysis::EinsteinVerdict::RicciFlat, "Ricci-flat");
  const auto c = analysis::conformal_identities_check(s, geometry::VectorField(3, {expr("x"), expr("y"), expr("z")}));
  ck.expect(c.rho == RationalFunction(1), "rho = 1");
  ck.expect(c.ricci_residual.is_zero() && c.scalar_residual.is_zero(), "conformal identities");
}

void criterion6(Checker& ck) {
  for (const char* name : {"ex1.json", "ex2.json", "flat.json"}) {
    const auto m = fixture(name);
    const auto& s = m.structure;
    ck.expect(analysis::dim3_curvature_identity_residual(s).is_zero(), std::string(name) + ": dimension-3 identity");
    const auto self = analysis::engine_self_tests(s, s.xi());
    for (const char* item : {"riemann_antisymmetry", "first_bianchi", "pair_symmetry", "second_pair_antisymmetry",
                             "contracted_bianchi", "dd_eta"}) {
      const auto* r = self.find(item);
      ck.expect(r != nullptr && r->holds, std::string(name) + ": " + item);
    }
    // d(d f) = 0 for the coordinate functions' products and the scalar curvature.
    for (const auto& f : {s.curvature().scalar, expr("x*y*z"), s.g().g()(2, 2)}) {
      const auto df = geometry::exterior_derivative(f, 3);
      ck.expect(geometry::exterior_derivative(df, s.convention()).is_zero(), std::string(name) + ": d(df)");
    }
  }
}

void criterion7(Checker& ck) {
  const auto ex1 = fixture("ex1.json");
  const auto ex2 = fixture("ex2.json");
  const auto c1 = analysis::collinear_residual(ex1.structure, RationalFunction(1));
  ck.expect(c1.direct.is_zero() && c1.agree, "EX1, b = 1: zero");
  const auto& s2 = ex2.structure;
  const auto c2 = analysis::collinear_residual(s2, RationalFunction(1));
  const auto expected = RationalFunction(2) * (s2.g().g() - geometry::outer(s2.eta(), s2.eta()));
  ck.expect(c2.direct == expected && !expected.is_zero() && c2.agree, "EX2, b = 1: 2(g - eta (x) eta)");

  testing::ExprGen gen(7007);
  for (const auto* s : {&ex1.structure, &s2}) {
    for (int i = 0; i < 20; ++i) {
      const auto b = expr(gen.polynomial(3, 2));
      ck.expect(analysis::collinear_residual(*s, b).agree, "paths agree for b = " + to_string(b, testing::property_coords()));
    }
  }
}

void criterion8(Checker& ck) {
  constexpr int kCases = 1000;
  const std::vector<std::pair<std::string, testing::PropertyRun>> runs = {
      {"product rule", testing::product_rule(8001, kCases)},
      {"evaluation homomorphism", testing::evaluation_homomorphism(8002, kCases)},
      {"mixed partials", testing::mixed_partials(8003, kCases)},
      {"parse/print round trip", testing::parse_print_round_trip(8004, kCases)},
  };
  for (const auto& [name, run] : runs) {
    ck.expect(run.cases == kCases, name + ": case count");
    ck.expect(run.failures == 0, name + ": " + std::to_string(run.failures) + " failures, first " + run.first_failure);
  }
}

void criterion9(Checker& ck) {
  const auto p1 = fixture("ex1.json", cli::MetricMode::Printed);
  const auto compat1 = structures::check_metric_compatibility(p1.structure);
  const auto* frame = compat1.find("frame");
  ck.expect(frame && !frame->holds && frame->residual && (*frame->residual)(0, 0) == expr("4*y^2"),
            "EX1 printed: g(e1,e1) - 1 = 4y^2");
  const auto r1 = cli::cmd_classify(p1);
  ck.expect(!r1.passed(), "EX1 printed: report fails");
  const auto* fe = cli::find_entry(*r1.find("classification"), "frame");
  ck.expect(fe && fe->value.find("[e1,e1]: 4*y^2") != std::string::npos, "EX1 printed: residual reported");

  const auto p2 = fixture("ex2.json", cli::MetricMode::Printed);
  const auto compat2 = structures::check_metric_compatibility(p2.structure);
  const auto* dual = compat2.find("eta_dual");
  ck.expect(dual && !dual->holds && dual->residual && (*dual->residual)(0) == expr("(x + 2*y)/2"),
            "EX2 printed: g(d_x, xi) = (x + 2y)/2");
  const auto r2 = cli::cmd_classify(p2);
  ck.expect(!r2.passed(), "EX2 printed: report fails");

  for (const char* name : {"ex1.json", "ex2.json"}) {
    const auto m = fixture(name);
    const auto r = cli::cmd_classify(m);
    ck.expect(r.passed() && entries_hold(r, true), std::string(name) + " from frame: axioms pass");
    ck.expect(!m.notes.empty(), std::string(name) + " from frame: discrepancy noted");
  }
}

struct Criterion {
  int number;
  const char* title;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "EX1 classifies as para-Sasakian with zero axiom residuals", criterion1},
      {2, "EX1 connection and curvature tables, r = 2", criterion2},
      {3, "EX1 soliton (xi, 2), Killing, automorphism and consequences", criterion3},
      {4, "EX2 para-Kenmotsu, table, r = -6, Einstein, c = -1, lambda, mu, xi(r)", criterion4},
      {5, "FLAT paracosymplectic identities, Ricci-flat, dilation conformal", criterion5},
      {6, "engine self-tests on all fixtures", criterion6},
      {7, "collinear fields: EX1 zero, EX2 2(g - eta (x) eta), paths agree", criterion7},
      {8, "CAS properties, 1000 cases each", criterion8},
      {9, "printed metrics expose their residuals", criterion9},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Checker ck;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ck.expect(seconds < kTimeLimitSeconds, "time limit");

    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.number << ": " << (ck.ok() ? "PASS" : "FAIL") << "  " << c.title << " (" << ck.count()
         << " checks, " << seconds << " s)";
    std::cout << line.str() << "\n";
    for (const auto& f : ck.failures()) std::cout << "    failed: " << f << "\n";
    if (!ck.ok()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
