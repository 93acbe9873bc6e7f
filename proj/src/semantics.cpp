// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ldcat/semantics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ldcat/error.hpp"

namespace ldcat {

std::vector<ConeFamily> cone_families(const FinCategory& c, ObjId vertex, std::span<const ObjId> legs, Quantifier q,
                                      std::size_t cap, bool* truncated) {
  if (truncated) *truncated = false;
  std::vector<std::span<const ArrId>> choices;
  for (ObjId leg : legs) {
    choices.push_back(q == Quantifier::Forall ? c.hom(vertex, leg) : c.hom(leg, vertex));
    if (choices.back().empty()) return {};
  }
  std::vector<ConeFamily> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    if (out.size() == cap) {
      if (truncated) *truncated = true;
      return out;
    }
    ConeFamily fam{vertex, {}};
    for (std::size_t i = 0; i < choices.size(); ++i) fam.legs.push_back(choices[i][idx[i]]);
    out.push_back(std::move(fam));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) return out;
  }
}

namespace {

std::size_t count_mediators(const FinCategory& c, Quantifier q, const ConeFamily& candidate, const ConeFamily& other) {
  std::size_t count = 0;
  if (q == Quantifier::Forall) {
    for (ArrId m : c.hom(other.vertex, candidate.vertex)) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < candidate.legs.size(); ++i) {
        ok = c.compose(candidate.legs[i], m) == other.legs[i];
      }
      if (ok) ++count;
    }
  } else {
    for (ArrId m : c.hom(candidate.vertex, other.vertex)) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < candidate.legs.size(); ++i) {
        ok = c.compose(m, candidate.legs[i]) == other.legs[i];
      }
      if (ok) ++count;
    }
  }
  return count;
}

std::vector<ConeFamily> all_families(const FinCategory& c, std::span<const ObjId> vertices, Quantifier q,
                                     std::span<const ObjId> legs, std::size_t cap, bool& truncated) {
  std::vector<ConeFamily> out;
  truncated = false;
  for (ObjId v : vertices) {
    bool t = false;
    auto fams = cone_families(c, v, legs, q, cap, &t);
    truncated = truncated || t;
    out.insert(out.end(), fams.begin(), fams.end());
  }
  return out;
}

}  // namespace

QuantifierObject find_quantifier_object(const FinCategory& c, std::span<const ObjId> vertices, Quantifier q,
                                        std::span<const ObjId> legs, const SearchLimits& limits) {
  bool truncated = false;
  const auto families = all_families(c, vertices, q, legs, limits.family_cap, truncated);
  std::vector<ObjId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());

  std::string failures;
  for (ObjId v : sorted) {
    for (const ConeFamily& candidate : families) {
      if (candidate.vertex != v) continue;
      const ConeFamily* bad = nullptr;
      std::size_t bad_count = 0;
      for (const ConeFamily& other : families) {
        std::size_t n = count_mediators(c, q, candidate, other);
        if (n != 1) {
          bad = &other;
          bad_count = n;
          break;
        }
      }
      if (!bad) return {v, candidate, truncated, legs.empty()};
      if (failures.size() < 400) {
        failures += " " + c.name(v) + ":" + std::to_string(bad_count) + (q == Quantifier::Forall ? "<-" : "->") +
                    c.name(bad->vertex);
      }
    }
  }
  std::string vertex_names;
  for (const auto& f : families) vertex_names += " " + c.name(f.vertex);
  throw MissingQuantifierObject(std::string("no ") + (q == Quantifier::Forall ? "terminal cone" : "initial cocone") +
                                " among reachable vertices; " + (q == Quantifier::Forall ? "cone" : "cocone") +
                                " vertices:" + (vertex_names.empty() ? " none" : vertex_names) +
                                "; mediator counts:" + (failures.empty() ? " none" : failures));
}

bool is_quantifier_object(const FinCategory& c, std::span<const ObjId> vertices, Quantifier q,
                          std::span<const ObjId> legs, const ConeFamily& candidate, const SearchLimits& limits) {
  if (std::find(vertices.begin(), vertices.end(), candidate.vertex) == vertices.end()) return false;
  if (candidate.legs.size() != legs.size()) return false;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const ArrId leg = candidate.legs[i];
    const bool shaped = q == Quantifier::Forall ? (c.dom(leg) == candidate.vertex && c.cod(leg) == legs[i])
                                                : (c.dom(leg) == legs[i] && c.cod(leg) == candidate.vertex);
    if (!shaped) return false;
  }
  bool truncated = false;
  for (const ConeFamily& other : all_families(c, vertices, q, legs, limits.family_cap, truncated)) {
    if (count_mediators(c, q, candidate, other) != 1) return false;
  }
  return true;
}

std::vector<Formula> closed_atoms(const Signature& sig, const TermUniverse& universe) {
  std::vector<Formula> out;
  for (const auto& rel : sig.relations) {
    std::vector<const std::vector<Term>*> pools;
    bool possible = true;
    for (const auto& s : rel.arg_sorts) {
      pools.push_back(&universe.of(s));
      possible = possible && !pools.back()->empty();
    }
    if (!possible) continue;
    std::vector<std::size_t> idx(pools.size(), 0);
    while (true) {
      std::vector<Term> args;
      for (std::size_t i = 0; i < pools.size(); ++i) args.push_back((*pools[i])[idx[i]]);
      out.push_back(Formula::atom(rel.name, std::move(args)));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == pools[k]->size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reach fixpoint

namespace {

constexpr const char* kBodyVar = "x";

// Atomic bodies with `x : sort` in at least one argument position.
std::vector<Formula> open_atoms(const Signature& sig, const TermUniverse& universe, const std::string& sort) {
  std::vector<Formula> out;
  const Term x = Term::variable(kBodyVar, sort);
  for (const auto& rel : sig.relations) {
    std::vector<std::vector<Term>> pools;
    bool possible = true;
    for (const auto& s : rel.arg_sorts) {
      std::vector<Term> pool;
      if (s == sort) pool.push_back(x);
      const auto& closed = universe.of(s);
      pool.insert(pool.end(), closed.begin(), closed.end());
      possible = possible && !pool.empty();
      pools.push_back(std::move(pool));
    }
    if (!possible || pools.empty()) continue;
    std::vector<std::size_t> idx(pools.size(), 0);
    while (true) {
      std::vector<Term> args;
      bool has_x = false;
      for (std::size_t i = 0; i < pools.size(); ++i) {
        args.push_back(pools[i][idx[i]]);
        has_x = has_x || args.back().is_variable();
      }
      if (has_x) out.push_back(Formula::atom(rel.name, std::move(args)));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == pools[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return out;
}

struct Tuple {
  std::vector<ObjId> legs;
  Formula provenance;
};

struct ClosureRun {
  std::vector<std::optional<Formula>> provenance;
  bool saturated = false;

  std::vector<ObjId> members() const {
    std::vector<ObjId> out;
    for (std::uint32_t i = 0; i < provenance.size(); ++i) {
      if (provenance[i]) out.push_back(ObjId{i});
    }
    return out;
  }
};

ClosureRun run_closure(const StructureTable& st, const Signature& sig, const AtomMap& atoms,
                       const TermUniverse& universe, std::size_t depth, const SearchLimits& limits,
                       const std::vector<ObjId>* fixed_vertices) {
  const FinCategory& c = st.category();
  ClosureRun run;
  run.provenance.resize(c.object_count());
  std::vector<ObjId> members;
  std::map<std::string, std::vector<Tuple>> tuples;
  std::map<std::string, std::set<std::vector<ObjId>>> tuple_keys;

  struct Fresh {
    std::vector<std::pair<ObjId, Formula>> objects;
    std::map<std::string, std::vector<Tuple>> tuples;
    bool empty() const {
      if (!objects.empty()) return false;
      for (const auto& [s, list] : tuples) {
        if (!list.empty()) return false;
      }
      return true;
    }
  };

  // Staged additions keep each round a function of the previous rounds only.
  std::vector<char> staged_obj;
  std::map<std::string, std::set<std::vector<ObjId>>> staged_tuple;
  auto stage_object = [&](Fresh& fresh, ObjId o, Formula f) {
    if (run.provenance[o.index] || staged_obj[o.index]) return;
    staged_obj[o.index] = 1;
    fresh.objects.emplace_back(o, std::move(f));
  };
  auto stage_tuple = [&](Fresh& fresh, const std::string& sort, std::vector<ObjId> legs, Formula f) {
    if (tuple_keys[sort].count(legs) || staged_tuple[sort].count(legs)) return;
    staged_tuple[sort].insert(legs);
    fresh.tuples[sort].push_back({std::move(legs), std::move(f)});
  };
  auto constant_tuples = [&](Fresh& fresh) {
    for (const auto& sort : sig.sorts) {
      const std::size_t n = universe.of(sort).size();
      for (const auto& [o, f] : fresh.objects) stage_tuple(fresh, sort, std::vector<ObjId>(n, o), f);
    }
  };
  auto commit = [&](Fresh& fresh) {
    for (auto& [o, f] : fresh.objects) {
      run.provenance[o.index] = std::move(f);
      members.push_back(o);
    }
    for (auto& [sort, list] : fresh.tuples) {
      for (auto& t : list) {
        tuple_keys[sort].insert(t.legs);
        tuples[sort].push_back(std::move(t));
      }
    }
  };
  auto reset_stage = [&] {
    staged_obj.assign(c.object_count(), 0);
    staged_tuple.clear();
  };

  // Round 0: M(0), M(1), atoms, atomic bodies.
  reset_stage();
  Fresh base;
  if (st.has_initial()) stage_object(base, st.initial().obj, Formula::zero());
  if (st.has_terminal()) stage_object(base, st.terminal().obj, Formula::one());
  for (const Formula& a : closed_atoms(sig, universe)) {
    if (auto it = atoms.find(to_string(a)); it != atoms.end()) stage_object(base, it->second, a);
  }
  for (const auto& sort : sig.sorts) {
    for (const Formula& body : open_atoms(sig, universe, sort)) {
      std::vector<ObjId> legs;
      bool complete = true;
      for (const Term& t : universe.of(sort)) {
        auto it = atoms.find(to_string(substitute(body, kBodyVar, t)));
        if (it == atoms.end()) {
          complete = false;
          break;
        }
        legs.push_back(it->second);
      }
      if (complete) stage_tuple(base, sort, std::move(legs), body);
    }
  }
  constant_tuples(base);
  commit(base);

  for (std::size_t round = 1; round <= depth + 1; ++round) {
    reset_stage();
    Fresh fresh;
    const std::vector<ObjId> prev = members;
    const auto prev_tuples = tuples;
    std::vector<ObjId> vertices = fixed_vertices ? *fixed_vertices : prev;
    std::sort(vertices.begin(), vertices.end());

    for (ObjId a : prev) {
      for (ObjId b : prev) {
        const Formula& fa = *run.provenance[a.index];
        const Formula& fb = *run.provenance[b.index];
        if (st.has_product(a, b)) stage_object(fresh, st.product(a, b).apex, Formula::times(fa, fb));
        if (st.has_coproduct(a, b)) stage_object(fresh, st.coproduct(a, b).apex, Formula::plus(fa, fb));
        if (st.has_exponential(a, b)) stage_object(fresh, st.exponential(a, b).apex, Formula::arrow(fa, fb));
      }
    }
    for (const auto& [sort, list] : prev_tuples) {
      for (const Tuple& t : list) {
        for (Quantifier q : {Quantifier::Forall, Quantifier::Exists}) {
          try {
            auto found = find_quantifier_object(c, vertices, q, t.legs, limits);
            stage_object(fresh, found.object,
                         q == Quantifier::Forall ? Formula::forall(kBodyVar, sort, t.provenance)
                                                 : Formula::exists(kBodyVar, sort, t.provenance));
          } catch (const MissingQuantifierObject&) {
          }
        }
      }
      for (const Tuple& t1 : list) {
        for (const Tuple& t2 : list) {
          std::vector<ObjId> times, plus, arrow;
          bool has_times = true, has_plus = true, has_arrow = true;
          for (std::size_t i = 0; i < t1.legs.size(); ++i) {
            const ObjId a = t1.legs[i], b = t2.legs[i];
            if (has_times && st.has_product(a, b)) times.push_back(st.product(a, b).apex); else has_times = false;
            if (has_plus && st.has_coproduct(a, b)) plus.push_back(st.coproduct(a, b).apex); else has_plus = false;
            if (has_arrow && st.has_exponential(a, b)) arrow.push_back(st.exponential(a, b).apex); else has_arrow = false;
          }
          if (has_times) stage_tuple(fresh, sort, std::move(times), Formula::times(t1.provenance, t2.provenance));
          if (has_plus) stage_tuple(fresh, sort, std::move(plus), Formula::plus(t1.provenance, t2.provenance));
          if (has_arrow) stage_tuple(fresh, sort, std::move(arrow), Formula::arrow(t1.provenance, t2.provenance));
        }
      }
    }
    constant_tuples(fresh);

    if (fresh.empty()) {
      run.saturated = true;
      break;
    }
    if (round == depth + 1) break;  // probe round only
    commit(fresh);
  }
  return run;
}

}  // namespace

ReachSet reach_fixpoint(const StructureTable& st, const Signature& sig, const AtomMap& atoms,
                        const TermUniverse& universe, std::size_t depth, const SearchLimits& limits) {
  constexpr std::size_t kMaxRefinements = 32;
  ClosureRun run = run_closure(st, sig, atoms, universe, depth, limits, nullptr);
  std::vector<ObjId> members = run.members();
  ReachSet out;
  out.depth = depth;
  out.converged = false;
  for (std::size_t i = 1; i <= kMaxRefinements; ++i) {
    ClosureRun next = run_closure(st, sig, atoms, universe, depth, limits, &members);
    std::vector<ObjId> next_members = next.members();
    run = std::move(next);
    out.refinements = i;
    if (next_members == members) {
      out.converged = true;
      break;
    }
    members = std::move(next_members);
  }
  out.members = run.members();
  out.provenance = std::move(run.provenance);
  out.saturated = run.saturated;
  return out;
}

// ---------------------------------------------------------------------------
// Interpretation

Interpretation::Interpretation(StructureTable st, Theory theory, TermUniverse universe, std::size_t reach_depth,
                               SearchLimits limits)
    : st_(std::move(st)), theory_(std::move(theory)), universe_(std::move(universe)), limits_(limits) {
  for (const auto& a : theory_.assignments) {
    auto obj = st_.category().find_object(a.object);
    if (!obj) {
      throw MalformedInput("line " + std::to_string(a.line) + ": unknown object '" + a.object + "' for " +
                           to_string(a.atom));
    }
    atoms_.emplace(to_string(a.atom), *obj);
  }
  reach_ = reach_fixpoint(st_, theory_.signature, atoms_, universe_, reach_depth, limits_);
  if (!reach_.converged) warn("reach set did not converge; quantifier objects may depend on search order");
  for (const auto& s : universe_.empty_sorts) {
    warn("sort " + s + " has no closed terms; quantifiers over it range over an empty diagram");
  }
}

void Interpretation::warn(std::string message) {
  if (std::find(warnings_.begin(), warnings_.end(), message) == warnings_.end()) warnings_.push_back(std::move(message));
}

std::vector<Formula> Interpretation::unassigned_atoms() const {
  std::vector<Formula> out;
  for (const Formula& a : closed_atoms(theory_.signature, universe_)) {
    if (!atoms_.count(to_string(a))) out.push_back(a);
  }
  return out;
}

ObjId Interpretation::interpret(const Formula& f) {
  const std::string key = alpha_key(f);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  ObjId result;
  switch (f.kind()) {
    case Connective::Zero: result = st_.initial().obj; break;
    case Connective::One: result = st_.terminal().obj; break;
    case Connective::Atom: {
      for (const Term& t : f.args()) {
        if (!t.closed()) throw MalformedInput("cannot interpret open formula " + to_string(f));
      }
      auto it = atoms_.find(to_string(f));
      if (it == atoms_.end()) throw MissingAtom("no interpretation for atom " + to_string(f));
      result = it->second;
      break;
    }
    case Connective::Times: {
      const ObjId a = interpret(f.left()), b = interpret(f.right());
      result = st_.product(a, b).apex;
      break;
    }
    case Connective::Plus: {
      const ObjId a = interpret(f.left()), b = interpret(f.right());
      result = st_.coproduct(a, b).apex;
      break;
    }
    case Connective::Arrow: {
      const ObjId a = interpret(f.left()), b = interpret(f.right());
      result = st_.exponential(a, b).apex;
      break;
    }
    case Connective::Forall:
    case Connective::Exists: result = quantifier_object(f).object; break;
  }
  memo_.emplace(key, result);
  return result;
}

QuantifierDiagram Interpretation::build_diagram(const Formula& body, const std::string& var, const std::string& sort) {
  QuantifierDiagram d{body, var, sort, universe_.of(sort), {}};
  for (const Term& t : d.terms) d.objects.push_back(interpret(substitute(body, var, t)));
  return d;
}

const QuantifierObject& Interpretation::quantifier_object(const Formula& f) {
  if (!f.is_quantifier()) throw ShapeMismatch(to_string(f) + " is not a quantified formula");
  const std::string key = alpha_key(f);
  if (auto it = quantifier_memo_.find(key); it != quantifier_memo_.end()) return it->second;

  const QuantifierDiagram d = build_diagram(f.body(), f.var(), f.sort());
  const Quantifier q = f.kind() == Connective::Forall ? Quantifier::Forall : Quantifier::Exists;
  QuantifierObject found;
  try {
    found = ldcat::find_quantifier_object(st_.category(), reach_.members, q, d.objects, limits_);
  } catch (const MissingQuantifierObject& e) {
    throw MissingQuantifierObject("no quantifier object for " + to_string(f) + ": " + e.what());
  }
  if (found.empty_diagram) {
    warn("empty diagram for " + to_string(f) + ": using the reach-relative " +
         (q == Quantifier::Forall ? "terminal" : "initial") + " object " + category().name(found.object));
  }
  if (found.truncated) warn("cone family enumeration truncated for " + to_string(f));
  return quantifier_memo_.emplace(key, std::move(found)).first->second;
}

ObjId interpret(Interpretation& interp, const Formula& f) { return interp.interpret(f); }

QuantifierDiagram build_diagram(Interpretation& interp, const Formula& body, const std::string& var,
                                const std::string& sort) {
  return interp.build_diagram(body, var, sort);
}

QuantifierObject find_quantifier_object(const Interpretation& interp, const ReachSet& reach, Quantifier q,
                                        const QuantifierDiagram& diagram) {
  return find_quantifier_object(interp.category(), reach.members, q, diagram.objects, interp.limits());
}

}  // namespace ldcat
