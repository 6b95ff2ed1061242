/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/cli/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pcv/geometry/calculus.hpp"
#include "pcv/ratcas/parser.hpp"

namespace pcv::cli {

using nlohmann::json;
using ratcas::CoordinateSystem;

std::string to_string(MetricMode m) { return m == MetricMode::FromFrame ? "from_frame" : "printed"; }

MetricMode parse_metric_mode(std::string_view s) {
  if (s == "from_frame") return MetricMode::FromFrame;
  if (s == "printed") return MetricMode::Printed;
  throw InputError("unknown metric mode '" + std::string(s) + "' (expected from_frame or printed)");
}

namespace {

constexpr int kSchemaVersion = 1;

const std::set<std::string> kTopLevelKeys = {"schema", "name", "coordinates", "metric_mode", "metric", "frame",
                                             "phi",    "xi",   "eta",         "eta_printed", "base_point",
                                             "candidates"};
const std::set<std::string> kFrameKeys = {"name", "components", "sign"};
const std::set<std::string> kCandidateKeys = {"name", "V", "lambda", "mu", "potential"};

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

// Floats are never valid: every number in the schema is an integer, every
// expression a string.
void reject_floats(const json& j, const std::string& where) {
  if (j.is_number_float()) fail(where, "floating-point numbers are not allowed; write expressions as strings");
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) reject_floats(j[i], where + "[" + std::to_string(i) + "]");
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) reject_floats(v, where + "." + k);
  }
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items())
    if (!allowed.contains(k)) fail(where, "unknown key '" + k + "'");
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(where, std::string("missing required key '") + key + "'");
  return obj.at(key);
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

RationalFunction parse_expression(const json& j, const CoordinateSystem& coords, const std::string& where) {
  const std::string text = require_string(j, where);
  try {
    return ratcas::parse_expr(text, coords);
  } catch (const ratcas::ParseError& e) {
    fail(where, "parse error at offset " + std::to_string(e.offset()) + " in '" + text + "': " + e.what());
  } catch (const std::exception& e) {
    fail(where, std::string(e.what()) + " in '" + text + "'");
  }
}

Rational parse_rational_field(const json& j, const std::string& where) {
  const std::string text = require_string(j, where);
  try {
    return ratcas::parse_rational(text);
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

std::vector<RationalFunction> parse_vector(const json& j, const CoordinateSystem& coords, const std::string& where) {
  if (!j.is_array() || j.size() != coords.size()) {
    fail(where, "expected an array of " + std::to_string(coords.size()) + " expression strings");
  }
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_expression(j[i], coords, where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<RationalFunction> parse_matrix(const json& j, const CoordinateSystem& coords, const std::string& where) {
  const auto n = coords.size();
  if (!j.is_array() || j.size() != n) fail(where, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = parse_vector(j[i], coords, where + "[" + std::to_string(i) + "]");
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

geometry::Frame parse_frame(const json& j, const CoordinateSystem& coords) {
  if (!j.is_array() || j.size() != coords.size()) {
    fail("frame", "expected " + std::to_string(coords.size()) + " frame vectors");
  }
  std::vector<std::string> names;
  std::vector<VectorField> vectors;
  std::vector<int> signs;
  for (std::size_t a = 0; a < j.size(); ++a) {
    const std::string where = "frame[" + std::to_string(a) + "]";
    const auto& e = j[a];
    if (!e.is_object()) fail(where, "expected an object with name, components and sign");
    check_keys(e, kFrameKeys, where);
    names.push_back(require_string(require(e, "name", where), where + ".name"));
    vectors.emplace_back(coords.size(), parse_vector(require(e, "components", where), coords, where + ".components"));
    const auto& sign = require(e, "sign", where);
    if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1)) {
      fail(where + ".sign", "expected 1 or -1");
    }
    signs.push_back(sign.get<int>());
  }
  try {
    return geometry::Frame(std::move(names), std::move(vectors), std::move(signs));
  } catch (const std::exception& e) {
    fail("frame", e.what());
  }
}

std::string join(const std::vector<RationalFunction>& v, const CoordinateSystem& coords) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += ratcas::to_string(v[i], coords);
  }
  return out + "]";
}

void metric_notes(const geometry::Tensor02& printed, const geometry::Tensor02& reconstructed, MetricMode mode,
                  const CoordinateSystem& coords, std::vector<std::string>& notes) {
  const auto n = coords.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (printed(i, j) == reconstructed(i, j)) continue;
      std::string note = "metric[" + coords[i] + "," + coords[j] + "]: printed " + ratcas::to_string(printed(i, j), coords) +
                         ", frame-reconstructed " + ratcas::to_string(reconstructed(i, j), coords);
      note += mode == MetricMode::FromFrame ? " (using frame-reconstructed)" : " (using printed)";
      notes.push_back(std::move(note));
    }
}

void require_regular(const geometry::Tensor& t, std::span<const Rational> p, const std::string& what) {
  try {
    (void)geometry::evaluate(t, p);
  } catch (const ratcas::PoleError&) {
    fail("base_point", "the base point is a pole of " + what);
  }
}

}  // namespace

Manifold load_manifold_text(std::string_view text, const std::string& source, const LoadOptions& options) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": invalid JSON: " + e.what());
  }
  try {
    if (!root.is_object()) fail("(root)", "expected a JSON object");
    reject_floats(root, "(root)");
    check_keys(root, kTopLevelKeys, "(root)");

    const auto& schema = require(root, "schema", "(root)");
    if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion) {
      fail("schema", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
    }

    const auto& coord_json = require(root, "coordinates", "(root)");
    if (!coord_json.is_array()) fail("coordinates", "expected an array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < coord_json.size(); ++i) {
      names.push_back(require_string(coord_json[i], "coordinates[" + std::to_string(i) + "]"));
    }
    std::optional<CoordinateSystem> coords_opt;
    try {
      coords_opt.emplace(std::move(names));
    } catch (const std::exception& e) {
      fail("coordinates", e.what());
    }
    const CoordinateSystem& coords = *coords_opt;
    const auto n = coords.size();

    std::optional<geometry::Frame> frame;
    if (root.contains("frame")) frame = parse_frame(root.at("frame"), coords);
    std::optional<geometry::Tensor02> printed;
    if (root.contains("metric")) printed.emplace(n, parse_matrix(root.at("metric"), coords, "metric"));

    MetricMode mode = frame ? MetricMode::FromFrame : MetricMode::Printed;
    if (root.contains("metric_mode")) mode = parse_metric_mode(require_string(root.at("metric_mode"), "metric_mode"));
    if (options.metric_mode) mode = *options.metric_mode;
    if (mode == MetricMode::FromFrame && !frame) fail("metric_mode", "from_frame needs a \"frame\" block");
    if (mode == MetricMode::Printed && !printed) fail("metric_mode", "printed needs a \"metric\" matrix");

    std::vector<std::string> notes;
    geometry::Tensor02 g = mode == MetricMode::FromFrame ? geometry::metric_from_frame(*frame) : *printed;
    if (frame && printed) metric_notes(*printed, geometry::metric_from_frame(*frame), mode, coords, notes);

    geometry::Tensor11 phi(n, parse_matrix(require(root, "phi", "(root)"), coords, "phi"));
    VectorField xi(n, parse_vector(require(root, "xi", "(root)"), coords, "xi"));
    geometry::OneForm eta(n, parse_vector(require(root, "eta", "(root)"), coords, "eta"));
    if (root.contains("eta_printed")) {
      const auto eta_printed = parse_vector(root.at("eta_printed"), coords, "eta_printed");
      if (eta_printed != eta.components()) {
        notes.push_back("eta: printed " + join(eta_printed, coords) + ", used " + join(eta.components(), coords) +
                        " (eta(xi) = " + ratcas::to_string(geometry::apply(geometry::OneForm(n, eta_printed), xi), coords) + " for the printed form)");
      }
    }

    const auto& bp = require(root, "base_point", "(root)");
    if (!bp.is_object()) fail("base_point", "expected an object mapping coordinates to rational strings");
    std::vector<Rational> base(n);
    std::set<std::string> seen;
    for (const auto& [k, v] : bp.items()) {
      const auto idx = coords.index_of(k);
      if (!idx) fail("base_point", "unknown coordinate '" + k + "'");
      base[*idx] = parse_rational_field(v, "base_point." + k);
      seen.insert(k);
    }
    if (seen.size() != n) fail("base_point", "every coordinate needs a value");
    require_regular(g.tensor(), base, "the metric");
    require_regular(phi.tensor(), base, "phi");
    require_regular(xi.tensor(), base, "xi");
    require_regular(eta.tensor(), base, "eta");

    std::vector<Candidate> candidates;
    if (root.contains("candidates")) {
      const auto& cj = root.at("candidates");
      if (!cj.is_array()) fail("candidates", "expected an array");
      for (std::size_t i = 0; i < cj.size(); ++i) {
        const std::string where = "candidates[" + std::to_string(i) + "]";
        const auto& c = cj[i];
        if (!c.is_object()) fail(where, "expected an object");
        check_keys(c, kCandidateKeys, where);
        Candidate cand{c.contains("name") ? require_string(c.at("name"), where + ".name") : "candidate " + std::to_string(i + 1),
                       VectorField(n), std::nullopt, std::nullopt, std::nullopt};
        if (c.contains("lambda")) cand.lambda = parse_rational_field(c.at("lambda"), where + ".lambda");
        if (c.contains("mu")) cand.mu = parse_rational_field(c.at("mu"), where + ".mu");
        if (c.contains("potential")) cand.potential = parse_expression(c.at("potential"), coords, where + ".potential");
        if (c.contains("V")) {
          cand.v = VectorField(n, parse_vector(c.at("V"), coords, where + ".V"));
        } else if (!cand.potential) {
          fail(where, "needs \"V\" or \"potential\"");
        }
        candidates.push_back(std::move(cand));
      }
    }

    std::string name = root.contains("name") ? require_string(root.at("name"), "name") : source;
    try {
      ParacontactStructure s(coords, std::move(phi), std::move(xi), std::move(eta), std::move(g), std::move(base),
                             std::move(frame), options.convention);
      // A potential without V means V = grad f.
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        auto& c = candidates[i];
        if (c.potential && !root.at("candidates")[i].contains("V")) c.v = geometry::gradient(*c.potential, s.g());
      }
      return Manifold{std::move(name), source, mode, std::move(s), std::move(candidates), std::move(notes)};
    } catch (const geometry::GeometryError& e) {
      fail("metric", e.what());
    } catch (const std::invalid_argument& e) {
      fail("(root)", e.what());
    }
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

Manifold load_manifold(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_manifold_text(buf.str(), path.string(), options);
}

}  // namespace pcv::cli
