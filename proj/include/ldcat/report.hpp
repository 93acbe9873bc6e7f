// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ldcat/category.hpp"
#include "ldcat/conditions.hpp"
#include "ldcat/semantics.hpp"
#include "ldcat/theorems.hpp"

namespace ldcat {

/// Line-oriented key=value report. Keys keep insertion order; values are
/// escaped so that every entry is one line. The `timing.` entries are
/// always rendered last, after a `# timing` marker.
class Report {
 public:
  void put(std::string key, std::string value);
  void put(std::string key, bool value) { put(std::move(key), std::string(value ? "true" : "false")); }
  void put(std::string key, std::size_t value) { put(std::move(key), std::to_string(value)); }
  void put(std::string key, const char* value) { put(std::move(key), std::string(value)); }
  void put_timing(std::string key, double millis);

  /// Embeds a file verbatim as numbered `<prefix>.line.NNNN` entries.
  void put_text(const std::string& prefix, std::string_view text);

  std::string render(bool with_timing = true) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::pair<std::string, std::string>> timing_;
};

std::string escape_value(std::string_view v);

/// The portion of a rendered report that must be identical across runs.
std::string comparable_section(std::string_view rendered);

void add_validation(Report& r, const FinCategory& c, const ValidationReport& v);
void add_interpretation(Report& r, const Interpretation& interp);
void add_conditions(Report& r, const ConditionReport& cr);
void add_delta(Report& r, const FinCategory& c, const std::vector<DeltaCertificate>& certs);
void add_frobenius(Report& r, const FinCategory& c, const std::vector<FrobeniusCertificate>& certs,
                   const std::vector<std::pair<std::string, std::string>>& failures);

}  // namespace ldcat
