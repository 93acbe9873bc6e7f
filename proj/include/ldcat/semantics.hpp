// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ldcat/category.hpp"
#include "ldcat/logic.hpp"
#include "ldcat/structure.hpp"
#include "ldcat/theory.hpp"

namespace ldcat {

struct SearchLimits {
  /// Upper bound on the (co)cone families enumerated per vertex. Thin
  /// categories never get near it.
  std::size_t family_cap = 4096;
};

enum class Quantifier { Forall, Exists };

/// The discrete diagram t |-> M(body[t/var]) over the closed terms of `sort`.
struct QuantifierDiagram {
  Formula body;
  std::string var;
  std::string sort;
  std::vector<Term> terms;
  std::vector<ObjId> objects;  // objects[i] = M(body[terms[i]/var])
};

/// Cone (legs vertex -> objects[i]) or cocone (legs objects[i] -> vertex).
struct ConeFamily {
  ObjId vertex;
  std::vector<ArrId> legs;
};

struct QuantifierObject {
  ObjId object;
  ConeFamily family;
  bool truncated = false;      // family enumeration hit the cap
  bool empty_diagram = false;  // no closed terms of the quantified sort
};

/// All (co)cone families on `vertex` over the leg objects, up to `cap`.
std::vector<ConeFamily> cone_families(const FinCategory& c, ObjId vertex, std::span<const ObjId> legs, Quantifier q,
                                      std::size_t cap, bool* truncated = nullptr);

/// For Forall: the first (vertex, cone) among `vertices` such that every
/// cone with vertex in `vertices` has exactly one leg-commuting arrow into
/// it. Exists is dual. Throws MissingQuantifierObject.
QuantifierObject find_quantifier_object(const FinCategory& c, std::span<const ObjId> vertices, Quantifier q,
                                        std::span<const ObjId> legs, const SearchLimits& limits = {});

/// Re-checks the defining property of a candidate found earlier.
bool is_quantifier_object(const FinCategory& c, std::span<const ObjId> vertices, Quantifier q,
                          std::span<const ObjId> legs, const ConeFamily& candidate, const SearchLimits& limits = {});

using AtomMap = std::unordered_map<std::string, ObjId>;  // printed closed atom -> object

/// Objects of the form M(B) for closed B of connective depth <= depth.
struct ReachSet {
  std::vector<ObjId> members;                  // ascending
  std::vector<std::optional<Formula>> provenance;  // indexed by object
  std::size_t depth = 0;
  bool saturated = false;  // one more round would add nothing
  bool converged = true;   // quantifier objects agree with the final member set
  std::size_t refinements = 0;

  bool contains(ObjId o) const { return o.index < provenance.size() && provenance[o.index].has_value(); }
};

/// Least set closed under the interpretation clauses, relative to itself:
/// quantifier objects are searched among the members. Open bodies are
/// tracked as tuples of leg objects over the universe of one sort.
ReachSet reach_fixpoint(const StructureTable& st, const Signature& sig, const AtomMap& atoms,
                        const TermUniverse& universe, std::size_t depth, const SearchLimits& limits = {});

/// The map M together with its memoized extension to closed formulas.
class Interpretation {
 public:
  /// Resolves the theory's atom assignments against the category (unknown
  /// object names raise MalformedInput) and computes the reach set.
  Interpretation(StructureTable st, Theory theory, TermUniverse universe, std::size_t reach_depth,
                 SearchLimits limits = {});

  const StructureTable& structure() const { return st_; }
  const FinCategory& category() const { return st_.category(); }
  const Theory& theory() const { return theory_; }
  const Signature& signature() const { return theory_.signature; }
  const TermUniverse& universe() const { return universe_; }
  const ReachSet& reach() const { return reach_; }
  const SearchLimits& limits() const { return limits_; }
  const AtomMap& atoms() const { return atoms_; }

  /// Closed atomic instances over the universe that have no assignment.
  std::vector<Formula> unassigned_atoms() const;

  ObjId interpret(const Formula& f);
  QuantifierDiagram build_diagram(const Formula& body, const std::string& var, const std::string& sort);
  /// The quantifier object of a closed Forall/Exists formula, memoized.
  const QuantifierObject& quantifier_object(const Formula& f);

  /// Empty-diagram and truncation notices collected so far, deduplicated.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  void warn(std::string message);

  StructureTable st_;
  Theory theory_;
  TermUniverse universe_;
  SearchLimits limits_;
  AtomMap atoms_;
  ReachSet reach_;
  std::unordered_map<std::string, ObjId> memo_;
  std::unordered_map<std::string, QuantifierObject> quantifier_memo_;
  std::vector<std::string> warnings_;
};

ObjId interpret(Interpretation& interp, const Formula& f);
QuantifierDiagram build_diagram(Interpretation& interp, const Formula& body, const std::string& var,
                                const std::string& sort);
QuantifierObject find_quantifier_object(const Interpretation& interp, const ReachSet& reach, Quantifier q,
                                        const QuantifierDiagram& diagram);

/// Every closed atomic formula over the universe.
std::vector<Formula> closed_atoms(const Signature& sig, const TermUniverse& universe);

}  // namespace ldcat
