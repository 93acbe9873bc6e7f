// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ldcat/semantics.hpp"
#include "ldcat/theorems.hpp"

namespace ldcat {

struct ConditionVerdict {
  int number = 0;
  std::string title;
  bool pass = true;
  std::size_t checked = 0;           // items examined
  std::vector<std::string> details;  // failures, capped

  void fail(std::string detail);
};

struct ConditionReport {
  std::array<ConditionVerdict, 7> conditions;
  /// alpha per Frobenius instance, as named by the condition (7) check.
  std::vector<std::pair<std::string, std::optional<ArrId>>> alphas;

  bool all_pass() const;
  const ConditionVerdict& operator[](int number) const { return conditions.at(number - 1); }
};

/// The theory's axioms and extra formulas, plus for every instance A,
/// exists x. B, exists x. A & B and forall x. B.
std::vector<Formula> checked_formulas(const Interpretation& interp, const std::vector<FrobeniusInstance>& instances);

/// Verdicts for the seven conditions of a logically distributive category:
///  (1) terminal object and binary products; (2) initial object and binary
///  coproducts; (3) exponentials; (4) Delta invertible on reachable
///  triples; (5) quantifier objects for every quantified subformula;
///  (6) the interpretation clauses; (7) alpha invertible per instance.
ConditionReport check_conditions(Interpretation& interp, const std::vector<Formula>& checked,
                                 const std::vector<FrobeniusInstance>& instances);

}  // namespace ldcat
