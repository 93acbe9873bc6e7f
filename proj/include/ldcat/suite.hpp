// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ldcat/heyting.hpp"
#include "ldcat/semantics.hpp"

namespace ldcat {

/// Everything needed to interpret formulas: parsed inputs, structure and M.
struct Pipeline {
  std::string model_text;
  std::string theory_text;
  std::size_t universe_depth = 1;
  std::size_t reach_depth = 3;
};

/// Validates the category (throwing MalformedInput with the first
/// violation), discovers its structure and builds the interpretation.
/// The universe depth comes from `depth` or the theory's `depth` line.
Interpretation build_interpretation(const FinCategory& c, const Theory& theory, std::optional<std::size_t> depth,
                                    std::size_t reach_depth, SearchLimits limits = {});

/// Closed formulas of connective depth <= max_depth. Levels up to
/// `exhaustive_depth` are complete; deeper levels are an evenly strided
/// sample of at most `level_cap` formulas, drawn from every combination of
/// lower-level formulas. Open quantifier bodies (in the variable x) are
/// sampled with the same cap.
std::vector<Formula> enumerate_formulas(const Signature& sig, const TermUniverse& universe, std::size_t max_depth,
                                        std::size_t level_cap = 500, std::size_t exhaustive_depth = 1);

struct SuiteCase {
  std::string model_id;
  std::string theory_id;
  HeytingModel model;
  std::filesystem::path model_file;
  std::filesystem::path theory_file;
};

/// chain-4, powerset-2 and powerset-3 crossed with the constants-only and
/// unary-function theories under `data_dir`.
std::vector<SuiteCase> bundled_suite(const std::filesystem::path& data_dir);

}  // namespace ldcat
