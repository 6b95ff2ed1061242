/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/cli/commands.hpp"

#include "pcv/analysis/curvature_checks.hpp"
#include "pcv/analysis/solitons.hpp"

#ifndef PCV_VERSION
#define PCV_VERSION "0.0.0"
#endif

namespace pcv::cli {

using structures::AxiomReport;
using structures::AxiomResult;
using structures::ClassKind;

Suite parse_suite(std::string_view s) {
  if (s == "class") return Suite::Class;
  if (s == "dim3") return Suite::Dim3;
  if (s == "conformal") return Suite::Conformal;
  throw InputError("unknown suite '" + std::string(s) + "' (expected class, dim3 or conformal)");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Class: return "class";
    case Suite::Dim3: return "dim3";
    case Suite::Conformal: return "conformal";
  }
  return "unknown";
}

std::string class_identifier(ClassKind kind) {
  switch (kind) {
    case ClassKind::ParaSasakian: return "ParaSasakian";
    case ClassKind::Paracosymplectic: return "Paracosymplectic";
    case ClassKind::ParaKenmotsu: return "ParaKenmotsu";
    case ClassKind::KParacontact: return "KParacontact";
    case ClassKind::ParacontactMetric: return "ParacontactMetric";
    case ClassKind::AlmostAlphaParacosymplectic: return "AlmostAlphaParacosymplectic";
    case ClassKind::AlmostParacontactMetric: return "AlmostParacontactMetric";
    case ClassKind::Invalid: return "Invalid";
  }
  return "Unknown";
}

namespace {

const ratcas::CoordinateSystem& coords_of(const Manifold& m) { return m.structure.coords(); }

std::string text(const RationalFunction& f, const Manifold& m) { return ratcas::to_string(f, coords_of(m)); }

std::string text(const geometry::Tensor& t, const Manifold& m) { return geometry::describe(t, coords_of(m)); }

std::string vector_text(const VectorField& v, const Manifold& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i > 0) out += ", ";
    out += text(v(i), m);
  }
  return out + ")";
}

Entry info(std::string name, std::string value, std::string formula = {}) {
  return Entry{std::move(name), std::move(formula), false, std::nullopt, std::move(value)};
}

Entry check(const AxiomResult& r, const Manifold& m, bool required, const std::string& prefix = {}) {
  std::string value = r.holds ? "0" : describe_residual(r, coords_of(m));
  if (!r.residual && !r.detail.empty()) value = r.detail;
  return Entry{prefix + r.name, r.formula, required, r.holds, std::move(value)};
}

Entry failure(std::string name, std::string why) { return Entry{std::move(name), {}, true, false, std::move(why)}; }

void append(Section& s, const AxiomReport& r, const Manifold& m, bool required, const std::string& prefix = {}) {
  for (const auto& item : r.items) s.entries.push_back(check(item, m, required, prefix));
}

std::string verdict_text(const structures::StructureClass& c, const Manifold& m) {
  std::string out = class_identifier(c.kind);
  if (c.alpha) out += " (alpha = " + text(*c.alpha, m) + ")";
  if (!c.failed.empty()) {
    out += " (failed:";
    for (const auto& f : c.failed) out += " " + f;
    out += ")";
  }
  return out;
}

Report header(const Manifold& m) {
  Report r;
  r.tool = "paracontact-verify";
  r.version = PCV_VERSION;
  r.input = m.source;
  r.metric_mode = to_string(m.mode);
  r.kappa = ratcas::to_string(m.structure.convention().kappa);
  r.wedge = ratcas::to_string(m.structure.convention().wedge);
  r.verdict = verdict_text(structures::classify(m.structure).verdict, m);
  r.notes = m.notes;
  return r;
}

// "-3e1", "xi", "2*y*e1 - e2", "0"
std::string frame_combination(const std::vector<RationalFunction>& c, const geometry::Frame& f, const Manifold& m) {
  std::string out;
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (c[a].is_zero()) continue;
    const auto& name = f.names()[a];
    std::string term;
    bool negative = false;
    if (c[a] == RationalFunction(1)) {
      term = name;
    } else if (c[a] == RationalFunction(-1)) {
      term = name;
      negative = true;
    } else {
      std::string coeff = text(c[a], m);
      if (coeff.front() == '-' && coeff.find_first_of("+-", 1) == std::string::npos) {
        negative = true;
        coeff.erase(0, 1);
      }
      const bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
      term = compound ? "(" + coeff + ")*" + name : (coeff.find_first_not_of("0123456789") == std::string::npos ? coeff + name : coeff + "*" + name);
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

// Columns by the differentiating field, rows by the differentiated one.
Table connection_layout(const geometry::Frame& f, const geometry::ConnectionTable& t, const Manifold& m) {
  Table out{"connection: nabla_A B in the frame", {}};
  const auto n = f.size();
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<std::string> row;
    for (std::size_t a = 0; a < n; ++a) {
      row.push_back("nabla_" + f.names()[a] + " " + f.names()[b] + " = " + frame_combination(t[a][b], f, m));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

// Columns by the pairs (1,2), (2,3), (1,3) and so on; rows by the third
// argument from the last frame vector back to the first.
Table curvature_layout(const geometry::Frame& f, const geometry::CurvatureTable& t, const Manifold& m) {
  Table out{"curvature: R(A,B)C in the frame", {}};
  const auto n = f.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t d = 1; d < n; ++d)
    for (std::size_t a = 0; a + d < n; ++a) pairs.emplace_back(a, a + d);
  for (std::size_t c = n; c-- > 0;) {
    std::vector<std::string> row;
    for (const auto& [a, b] : pairs) {
      row.push_back("R(" + f.names()[a] + "," + f.names()[b] + ")" + f.names()[c] + " = " +
                    frame_combination(t[a][b][c], f, m));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string sign_text(analysis::SignClass c) { return analysis::to_string(c); }

}  // namespace

Section classification_section(const Manifold& m) {
  const auto& s = m.structure;
  const auto c = structures::classify(s);
  Section out{"classification", {}, {}};
  out.entries.push_back(info("class", verdict_text(c.verdict, m)));
  const std::size_t structural = structures::check_almost_paracontact(s).items.size() +
                                 structures::check_metric_compatibility(s).items.size();
  for (std::size_t i = 0; i < c.report.items.size(); ++i) out.entries.push_back(check(c.report.items[i], m, i < structural));
  if (c.h) out.entries.push_back(Entry{"h", "1/2 L_xi phi", false, c.h->h.is_zero(), c.h->h.is_zero() ? "0" : text(c.h->h.tensor(), m)});
  if (c.alpha) {
    out.entries.push_back(info("d_phi", text(c.alpha->d_phi.coefficient, m), "d Phi"));
    out.entries.push_back(info("eta_wedge_phi", text(c.alpha->eta_wedge_phi.coefficient, m), "eta ^ Phi"));
    out.entries.push_back(info("alpha", c.alpha->alpha ? text(*c.alpha->alpha, m) : "undetermined", "d Phi = 2 alpha eta ^ Phi"));
  }
  return out;
}

Section curvature_section(const Manifold& m, bool frame_tables) {
  const auto& s = m.structure;
  const auto& c = s.curvature();
  if (frame_tables && !s.frame()) throw InputError(m.source + ": --frame needs a \"frame\" block in the input");
  Section out{"curvature", {}, {}};
  out.entries.push_back(info("christoffel", text(c.gamma.tensor(), m), "Gamma^k_ij"));
  out.entries.push_back(info("ricci", text(c.ricci.tensor(), m), "S"));
  out.entries.push_back(info("ricci_operator", text(c.ricci_operator.tensor(), m), "Q"));
  out.entries.push_back(info("scalar", text(c.scalar, m), "r"));

  const auto e = analysis::einstein_classify(s);
  out.entries.push_back(info("einstein", analysis::to_string(e.verdict), "Q = alpha I + beta eta (x) xi"));
  out.entries.push_back(info("einstein_alpha", e.alpha ? text(*e.alpha, m) : "none", "alpha"));
  out.entries.push_back(info("einstein_beta", e.beta ? text(*e.beta, m) : "none", "beta"));
  const auto k = analysis::constant_curvature_solve(s);
  out.entries.push_back(info("constant_curvature", k.c ? ratcas::to_string(*k.c) : "none", "c"));

  if (frame_tables) {
    const auto& f = *s.frame();
    out.tables.push_back(connection_layout(f, geometry::connection_table(f, c.gamma), m));
    out.tables.push_back(curvature_layout(f, geometry::curvature_table(f, c.riemann), m));
  }
  return out;
}

Section soliton_section(const Manifold& m) {
  const auto& s = m.structure;
  Section out{"solitons", {}, {}};
  out.entries.push_back(info("yamabe_convention", "lambda > 0 shrinking, lambda = 0 steady, lambda < 0 expanding"));
  out.entries.push_back(info("ricci_convention", "mu < 0 shrinking, mu = 0 steady, mu > 0 expanding"));

  for (const auto& cand : m.candidates) {
    const std::string p = cand.name + ".";
    out.entries.push_back(info(p + "V", vector_text(cand.v, m)));
    if (cand.potential) {
      const VectorField grad = geometry::gradient(*cand.potential, s.g());
      const auto r = structures::residual_result("gradient", "V - grad f", (cand.v - grad).tensor());
      out.entries.push_back(check(r, m, true, p));
    }
    if (cand.lambda) {
      const auto y = analysis::yamabe_check(s, cand.v, *cand.lambda);
      out.entries.push_back(Entry{p + "yamabe", "L_V g - (lambda - r) g", true, y.holds, y.holds ? "0" : text(y.residual.tensor(), m)});
      out.entries.push_back(info(p + "lambda", ratcas::to_string(*cand.lambda) + " (" + sign_text(y.sign) + ")"));
      out.entries.push_back(info(p + "rho", text(*y.rho, m), "(lambda - r)/2"));
      if (y.holds) append(out, analysis::soliton_consequence_suite(s, cand.v, *cand.lambda), m, true, p);
    }
    const auto lambda = analysis::yamabe_solve_lambda(s, cand.v);
    out.entries.push_back(info(p + "lambda_solved", lambda ? ratcas::to_string(*lambda) + " (" + sign_text(analysis::yamabe_sign(*lambda)) + ")" : "none",
                               "L_V g + r g = lambda g"));
    if (cand.mu) {
      const auto r = analysis::ricci_soliton_check(s, cand.v, *cand.mu);
      out.entries.push_back(Entry{p + "ricci", "L_V g + 2 S + 2 mu g", true, r.holds, r.holds ? "0" : text(r.residual.tensor(), m)});
      out.entries.push_back(info(p + "mu", ratcas::to_string(*cand.mu) + " (" + sign_text(r.sign) + ")"));
    }
    const auto mu = analysis::ricci_solve_mu(s, cand.v);
    out.entries.push_back(info(p + "mu_solved", mu ? ratcas::to_string(*mu) + " (" + sign_text(analysis::ricci_sign(*mu)) + ")" : "none",
                               "L_V g + 2 S = -2 mu g"));
    out.entries.push_back(check(analysis::killing_check(s, cand.v), m, false, p));
    const auto rho = analysis::conformal_factor(s, cand.v);
    out.entries.push_back(info(p + "conformal_factor", rho ? text(*rho, m) : "none", "L_V g = 2 rho g"));
    append(out, analysis::automorphism_check(s, cand.v), m, false, p);
  }

  const auto kind = structures::classify(s).verdict.kind;
  if (kind == ClassKind::ParaSasakian || kind == ClassKind::ParaKenmotsu) {
    const auto c = analysis::collinear_residual(s, RationalFunction(1));
    out.entries.push_back(Entry{"collinear_b1", "L_{b xi} g, b = 1", false, c.direct.is_zero(), c.direct.is_zero() ? "0" : text(c.direct.tensor(), m)});
    out.entries.push_back(Entry{"collinear_paths", "L_{b xi} g - closed form, b = 1", true, c.agree,
                                c.agree ? "0" : text((c.direct - c.closed_form).tensor(), m)});
  }
  return out;
}

Section identity_section(const Manifold& m, Suite suite) {
  const auto& s = m.structure;
  Section out{"identities: " + to_string(suite), {}, {}};
  switch (suite) {
    case Suite::Class: {
      const auto kind = structures::classify(s).verdict.kind;
      if (kind != ClassKind::ParaSasakian && kind != ClassKind::Paracosymplectic && kind != ClassKind::ParaKenmotsu) {
        out.entries.push_back(failure("class_suite", "no identity suite for class " + class_identifier(kind)));
        break;
      }
      append(out, structures::structure_identity_suite(s, kind), m, true);
      out.entries.push_back(check(analysis::xi_scalar_derivative_check(s), m, true));
      out.entries.push_back(check(analysis::ricci_closed_form_check(s), m, true));
      break;
    }
    case Suite::Dim3:
      if (s.dim() != 3) {
        out.entries.push_back(failure("dim3_curvature", "input has dimension " + std::to_string(s.dim())));
        break;
      }
      out.entries.push_back(check(analysis::dim3_curvature_identity_check(s), m, true));
      append(out, analysis::engine_self_tests(s, s.xi()), m, true);
      break;
    case Suite::Conformal:
      if (m.candidates.empty()) out.entries.push_back(info("candidates", "none"));
      for (const auto& cand : m.candidates) {
        const std::string p = cand.name + ".";
        if (!analysis::conformal_factor(s, cand.v)) {
          out.entries.push_back(info(p + "conformal", "not conformal"));
          continue;
        }
        const auto c = analysis::conformal_identities_check(s, cand.v);
        out.entries.push_back(info(p + "rho", text(c.rho, m), "L_V g = 2 rho g"));
        out.entries.push_back(Entry{p + "conformal_ricci", "L_V S + (n - 2) Hess rho - (Delta rho) g", true, c.ricci_residual.is_zero(),
                                    c.ricci_residual.is_zero() ? "0" : text(c.ricci_residual.tensor(), m)});
        out.entries.push_back(Entry{p + "conformal_scalar", "L_V r + 2 rho r - 2 (n - 1) Delta rho", true, c.scalar_residual.is_zero(),
                                    text(c.scalar_residual, m)});
      }
      break;
  }
  return out;
}

Report cmd_classify(const Manifold& m) {
  Report r = header(m);
  r.sections.push_back(classification_section(m));
  return r;
}

Report cmd_curvature(const Manifold& m, bool frame_tables) {
  Report r = header(m);
  r.sections.push_back(curvature_section(m, frame_tables));
  return r;
}

Report cmd_solitons(const Manifold& m) {
  Report r = header(m);
  r.sections.push_back(soliton_section(m));
  return r;
}

Report cmd_identities(const Manifold& m, Suite suite) {
  Report r = header(m);
  r.sections.push_back(identity_section(m, suite));
  return r;
}

Report cmd_report(const Manifold& m) {
  Report r = header(m);
  r.sections.push_back(classification_section(m));
  r.sections.push_back(curvature_section(m, m.structure.frame().has_value()));
  r.sections.push_back(soliton_section(m));
  for (auto suite : {Suite::Class, Suite::Dim3, Suite::Conformal}) r.sections.push_back(identity_section(m, suite));
  return r;
}

}  // namespace pcv::cli
