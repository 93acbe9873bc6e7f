// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ldcat {

struct FunctionSymbol {
  std::string name;
  std::vector<std::string> arg_sorts;
  std::string result_sort;
};

struct RelationSymbol {
  std::string name;
  std::vector<std::string> arg_sorts;
};

class Formula;

/// A multi-sorted signature: sorts, function symbols, relation symbols and
/// axioms. Axioms are parsed and kept but never constrain models.
struct Signature {
  std::vector<std::string> sorts;
  std::vector<FunctionSymbol> functions;
  std::vector<RelationSymbol> relations;
  std::vector<Formula> axioms;

  bool has_sort(std::string_view s) const;
  const FunctionSymbol* function(std::string_view name) const;
  const RelationSymbol* relation(std::string_view name) const;
};

struct Term {
  enum class Kind { Variable, Application };

  Kind kind = Kind::Application;
  std::string name;
  std::string sort;
  std::vector<Term> args;

  static Term variable(std::string name, std::string sort);
  static Term apply(std::string name, std::string sort, std::vector<Term> args = {});

  bool is_variable() const { return kind == Kind::Variable; }
  bool closed() const;
  std::size_t depth() const;

  friend bool operator==(const Term&, const Term&) = default;
};

std::string to_string(const Term& t);

enum class Connective { Zero, One, Atom, Times, Plus, Arrow, Forall, Exists };

/// Immutable formula tree with shared subterms. Copies are cheap.
class Formula {
 public:
  Formula();  // Zero

  static Formula zero();
  static Formula one();
  static Formula atom(std::string relation, std::vector<Term> args = {});
  static Formula times(Formula a, Formula b);
  static Formula plus(Formula a, Formula b);
  static Formula arrow(Formula a, Formula b);
  static Formula forall(std::string var, std::string sort, Formula body);
  static Formula exists(std::string var, std::string sort, Formula body);

  Connective kind() const;
  bool is_binary() const;
  bool is_quantifier() const;

  // Atom accessors.
  const std::string& relation() const;
  const std::vector<Term>& args() const;
  // Binary accessors.
  const Formula& left() const;
  const Formula& right() const;
  // Quantifier accessors.
  const std::string& var() const;
  const std::string& sort() const;
  const Formula& body() const;

  /// Connective depth: atoms, 0 and 1 have depth 0.
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Variable = std::pair<std::string, std::string>;  // (name, sort)

/// Concrete syntax: `&` (times) binds tighter than `|` (plus), which binds
/// tighter than the right-associative `->`; `0`, `1`, `forall x:s. F`,
/// `exists x:s. F`. Quantifiers in operand position are parenthesized.
std::string to_string(const Formula& f);

/// Printing in which bound variables are replaced by their binder depth, so
/// alpha-equivalent formulas share a key.
std::string alpha_key(const Formula& f);

std::set<Variable> free_vars(const Formula& f);
bool is_closed(const Formula& f);

/// Replaces the free occurrences of `var` by the closed term `t`.
/// Throws SortMismatch when an occurrence has a sort other than t.sort.
Formula substitute(const Formula& f, const std::string& var, const Term& t);

std::set<Variable> free_vars(const Term& t);

/// Parses a formula over `sig`. Free variables are allowed only when listed
/// in `context` (name -> sort).
Formula parse_formula(std::string_view text, const Signature& sig,
                      const std::map<std::string, std::string>& context = {});

Term parse_term(std::string_view text, const Signature& sig,
                const std::map<std::string, std::string>& context = {});

}  // namespace ldcat
