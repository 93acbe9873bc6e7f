// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ldcat/category.hpp"

namespace ldcat {

struct ProductWitness {
  ObjId left, right;
  ObjId apex;
  ArrId proj1, proj2;
};

struct CoproductWitness {
  ObjId left, right;
  ObjId apex;
  ArrId inj1, inj2;
};

struct TerminalWitness {
  ObjId obj;
};

struct InitialWitness {
  ObjId obj;
};

/// apex = target^base, eval : apex x base -> target.
struct ExponentialWitness {
  ObjId base, target;
  ObjId apex;
  ArrId eval;
};

class StructureTable;

// Universal-property searches. Each scans candidates in ascending index
// order and returns the first one whose mediators are unique against every
// object, or throws NoSuchStructure naming the closest candidate.
ProductWitness find_product(const FinCategory& c, ObjId a, ObjId b);
CoproductWitness find_coproduct(const FinCategory& c, ObjId a, ObjId b);
TerminalWitness find_terminal(const FinCategory& c);
InitialWitness find_initial(const FinCategory& c);

/// Needs the products X x base for every X; those are looked up in `st`.
ExponentialWitness find_exponential(const StructureTable& st, ObjId base, ObjId target);

/// Cache of every product, coproduct and exponential of a validated
/// category, plus terminal and initial objects. Immutable once built;
/// absent structure is remembered together with the search diagnostic.
class StructureTable {
 public:
  /// Runs every search. The category must already be validated.
  static StructureTable discover(FinCategory c);

  const FinCategory& category() const { return category_; }

  bool has_terminal() const { return terminal_.has_value(); }
  bool has_initial() const { return initial_.has_value(); }
  bool has_product(ObjId a, ObjId b) const { return products_[key(a, b)].has_value(); }
  bool has_coproduct(ObjId a, ObjId b) const { return coproducts_[key(a, b)].has_value(); }
  bool has_exponential(ObjId base, ObjId target) const { return exponentials_[key(base, target)].has_value(); }

  // These throw NoSuchStructure with the recorded diagnostic.
  const TerminalWitness& terminal() const;
  const InitialWitness& initial() const;
  const ProductWitness& product(ObjId a, ObjId b) const;
  const CoproductWitness& coproduct(ObjId a, ObjId b) const;
  const ExponentialWitness& exponential(ObjId base, ObjId target) const;

  const std::string& product_failure(ObjId a, ObjId b) const { return product_errors_[key(a, b)]; }
  const std::string& coproduct_failure(ObjId a, ObjId b) const { return coproduct_errors_[key(a, b)]; }
  const std::string& exponential_failure(ObjId base, ObjId target) const {
    return exponential_errors_[key(base, target)];
  }
  const std::string& terminal_failure() const { return terminal_error_; }
  const std::string& initial_failure() const { return initial_error_; }

 private:
  explicit StructureTable(FinCategory c);
  std::size_t key(ObjId a, ObjId b) const { return a.index * category_.object_count() + b.index; }

  FinCategory category_;
  std::optional<TerminalWitness> terminal_;
  std::optional<InitialWitness> initial_;
  std::string terminal_error_, initial_error_;
  std::vector<std::optional<ProductWitness>> products_;
  std::vector<std::optional<CoproductWitness>> coproducts_;
  std::vector<std::optional<ExponentialWitness>> exponentials_;
  std::vector<std::string> product_errors_, coproduct_errors_, exponential_errors_;
};

// Canonical arrows. Mediators are found by hom-set search and checked for
// uniqueness; zero or several mediators raise UniversalityBroken.

/// <f, g> : W -> A x B for f : W -> A, g : W -> B.
ArrId pair(const StructureTable& st, ArrId f, ArrId g);

/// [f, g] : A + B -> Z for f : A -> Z, g : B -> Z.
ArrId copair(const StructureTable& st, ArrId f, ArrId g);

/// f x g = <f . proj1, g . proj2> : A x B -> A' x B'.
ArrId arrow_product(const StructureTable& st, ArrId f, ArrId g);

/// <proj2, proj1> : A x B -> B x A.
ArrId swap(const StructureTable& st, ObjId a, ObjId b);

/// Exponential transpose of f : W x A -> C, the unique W -> C^A with
/// eval . (transpose(f) x id_A) = f.
ArrId transpose(const StructureTable& st, ObjId w, ObjId a, ArrId f);

/// Inverse of transpose: g : W -> C^A goes to eval . (g x id_A).
ArrId theta(const StructureTable& st, ObjId a, ObjId c, ArrId g);

/// Number of arrows W -> A x B mediating (f, g); diagnostics and tests.
std::size_t count_pair_mediators(const StructureTable& st, ArrId f, ArrId g);

}  // namespace ldcat
