// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldcat/logic.hpp"

namespace ldcat {

/// `interp <closed atom> = <object name>`; the object is resolved against a
/// category only when an Interpretation is built.
struct AtomAssignment {
  Formula atom;
  std::string object;
  std::size_t line = 0;
};

struct Theory {
  Signature signature;
  std::optional<std::size_t> depth;  // term-universe depth bound
  std::vector<AtomAssignment> assignments;
  std::vector<Formula> formulas;  // extra closed formulas to check
};

// Theory files, one directive per line, `#` comments:
//
//   sort <s>
//   fun <f> : <s1> * ... * <sn> -> <s>     (constants: `fun c : s`)
//   rel <P> : <s1> * ... * <sn>             (propositions: `rel P`)
//   axiom <formula>
//   formula <closed formula>
//   depth <n>
//   interp <closed atom> = <object>
Theory parse_theory(std::string_view text);
Signature parse_signature(std::string_view text);
Theory load_theory(const std::filesystem::path& path);

/// Closed terms of every sort up to a nesting depth.
struct TermUniverse {
  std::map<std::string, std::vector<Term>> terms;  // per sort, ordered by depth then text
  std::size_t depth = 1;
  bool saturated = false;                // depth + 1 would add nothing
  std::vector<std::string> empty_sorts;  // sorts without closed terms

  const std::vector<Term>& of(const std::string& sort) const;
};

/// Requires depth >= 1. Throws ScaleExceeded past `limit` terms.
TermUniverse enumerate_closed_terms(const Signature& sig, std::size_t depth, std::size_t limit = 4096);

}  // namespace ldcat
