/*
 * Copyright (c) 2026 The paracontact-verify Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcv::cli {

/// One line of a report. Required entries decide the exit status; optional
/// ones are reported checks that are allowed to fail; entries without
/// `holds` carry a computed value only.
struct Entry {
  std::string name;
  std::string formula;
  bool required = false;
  std::optional<bool> holds;
  /// "0" for a vanishing residual, the residual listing otherwise, or the value.
  std::string value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Cells laid out as printed, row by row.
struct Table {
  std::string title;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

struct Section {
  std::string title;
  std::vector<Entry> entries;
  std::vector<Table> tables;

  friend bool operator==(const Section&, const Section&) = default;
};

struct Report {
  std::string tool;
  std::string version;
  std::string input;
  std::string metric_mode;
  std::string kappa;
  std::string wedge;
  std::string verdict;
  std::vector<std::string> notes;
  std::vector<Section> sections;

  /// No required entry fails.
  bool passed() const;
  const Section* find(std::string_view title) const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Looks up an entry by name within a section; nullptr when absent.
const Entry* find_entry(const Section& s, std::string_view name);

std::string to_text(const Report& r);
std::string to_json(const Report& r);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
Report report_from_json(std::string_view text);

}  // namespace pcv::cli
