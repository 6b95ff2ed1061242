/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "pcv/cli/report.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace pcv::cli {

using nlohmann::ordered_json;

bool Report::passed() const {
  for (const auto& s : sections)
    for (const auto& e : s.entries)
      if (e.required && e.holds == false) return false;
  return true;
}

const Section* Report::find(std::string_view title) const {
  for (const auto& s : sections)
    if (s.title == title) return &s;
  return nullptr;
}

const Entry* find_entry(const Section& s, std::string_view name) {
  for (const auto& e : s.entries)
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

std::string status(const Entry& e) {
  if (!e.holds) return "    ";
  if (e.required) return *e.holds ? "PASS" : "FAIL";
  return *e.holds ? "yes " : "no  ";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

void render_table(const Table& t, std::string& out) {
  out += "  " + t.title + "\n";
  std::vector<std::size_t> width;
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : t.rows) {
    std::string line = "    ";
    for (std::size_t c = 0; c < row.size(); ++c) line += c + 1 < row.size() ? pad(row[c], width[c] + 3) : row[c];
    out += line + "\n";
  }
}

}  // namespace

std::string to_text(const Report& r) {
  std::string out;
  out += r.tool + " " + r.version + "\n";
  out += "input: " + r.input + " (metric: " + r.metric_mode + ")\n";
  out += "convention: kappa=" + r.kappa + " wedge=" + r.wedge + "\n";
  if (!r.verdict.empty()) out += "class: " + r.verdict + "\n";
  for (const auto& s : r.sections) {
    out += "\n[" + s.title + "]\n";
    std::size_t width = 0;
    for (const auto& e : s.entries) width = std::max(width, e.name.size());
    for (const auto& e : s.entries) {
      out += "  " + status(e) + " " + pad(e.name, width) + "  ";
      if (!e.holds) {
        out += e.value;
        if (!e.formula.empty()) out += "    [" + e.formula + "]";
        out += "\n";
        continue;
      }
      if (!e.formula.empty()) out += e.formula + " = ";
      out += e.value + "\n";
    }
    for (const auto& t : s.tables) render_table(t, out);
  }
  if (!r.notes.empty()) {
    out += "\nnotes:\n";
    for (const auto& n : r.notes) out += "  - " + n + "\n";
  }
  out += "\nresult: ";
  out += r.passed() ? "pass" : "FAIL";
  out += "\n";
  return out;
}

std::string to_json(const Report& r) {
  ordered_json j;
  j["tool"] = r.tool;
  j["version"] = r.version;
  j["input"] = r.input;
  j["metric_mode"] = r.metric_mode;
  j["convention"] = {{"kappa", r.kappa}, {"wedge", r.wedge}};
  j["verdict"] = r.verdict;
  j["passed"] = r.passed();
  j["notes"] = r.notes;
  j["sections"] = ordered_json::array();
  for (const auto& s : r.sections) {
    ordered_json sj;
    sj["title"] = s.title;
    sj["entries"] = ordered_json::array();
    for (const auto& e : s.entries) {
      ordered_json ej;
      ej["name"] = e.name;
      ej["formula"] = e.formula;
      ej["required"] = e.required;
      ej["holds"] = e.holds ? ordered_json(*e.holds) : ordered_json(nullptr);
      ej["value"] = e.value;
      sj["entries"].push_back(std::move(ej));
    }
    sj["tables"] = ordered_json::array();
    for (const auto& t : s.tables) sj["tables"].push_back({{"title", t.title}, {"rows", t.rows}});
    j["sections"].push_back(std::move(sj));
  }
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    Report r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.metric_mode = j.at("metric_mode").get<std::string>();
    r.kappa = j.at("convention").at("kappa").get<std::string>();
    r.wedge = j.at("convention").at("wedge").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& sj : j.at("sections")) {
      Section s;
      s.title = sj.at("title").get<std::string>();
      for (const auto& ej : sj.at("entries")) {
        Entry e;
        e.name = ej.at("name").get<std::string>();
        e.formula = ej.at("formula").get<std::string>();
        e.required = ej.at("required").get<bool>();
        if (!ej.at("holds").is_null()) e.holds = ej.at("holds").get<bool>();
        e.value = ej.at("value").get<std::string>();
        s.entries.push_back(std::move(e));
      }
      for (const auto& tj : sj.at("tables")) {
        s.tables.push_back(Table{tj.at("title").get<std::string>(), tj.at("rows").get<std::vector<std::vector<std::string>>>()});
      }
      r.sections.push_back(std::move(s));
    }
    if (j.at("passed").get<bool>() != r.passed()) throw std::invalid_argument("report 'passed' flag disagrees with its entries");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace pcv::cli
