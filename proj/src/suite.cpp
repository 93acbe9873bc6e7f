// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ldcat/suite.hpp"

#include <map>

#include "ldcat/error.hpp"

namespace ldcat {

Interpretation build_interpretation(const FinCategory& c, const Theory& theory, std::optional<std::size_t> depth,
                                    std::size_t reach_depth, SearchLimits limits) {
  const ValidationReport v = validate_category(c);
  if (!v.ok()) throw MalformedInput("category law violated: " + v.violations.front().message);
  TermUniverse universe = enumerate_closed_terms(theory.signature, depth.value_or(theory.depth.value_or(1)));
  return Interpretation(StructureTable::discover(c), theory, std::move(universe), reach_depth, limits);
}

namespace {

enum class Op { Times, Plus, Arrow };

Formula combine(Op op, const Formula& a, const Formula& b) {
  switch (op) {
    case Op::Times: return Formula::times(a, b);
    case Op::Plus: return Formula::plus(a, b);
    case Op::Arrow: return Formula::arrow(a, b);
  }
  return a;
}

// One level of the enumeration: every op(a, b) with a, b drawn from `lower`
// and at least one of them from `newest`, plus `extra`. Index-addressed so
// that a strided sample never materialises the full level.
class Level {
 public:
  Level(const std::vector<Formula>& older, const std::vector<Formula>& newest, std::vector<Formula> extra)
      : older_(older), newest_(newest), extra_(std::move(extra)) {
    const std::size_t all = older.size() + newest.size();
    pairs_ = all * all - older.size() * older.size();
  }

  std::size_t size() const { return extra_.size() + 3 * pairs_; }

  Formula at(std::size_t i) const {
    if (i < extra_.size()) return extra_[i];
    i -= extra_.size();
    const Op op = static_cast<Op>(i % 3);
    std::size_t p = i / 3;
    // Pairs with the left operand from `newest`: newest x all.
    const std::size_t all = older_.size() + newest_.size();
    if (p < newest_.size() * all) return combine(op, newest_[p / all], pick(p % all));
    p -= newest_.size() * all;
    // Remaining: older x newest.
    return combine(op, older_[p / newest_.size()], newest_[p % newest_.size()]);
  }

  std::vector<Formula> sample(std::size_t cap, bool exhaustive) const {
    std::vector<Formula> out;
    const std::size_t n = size();
    if (exhaustive || n <= cap) {
      for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
      return out;
    }
    for (std::size_t k = 0; k < cap; ++k) out.push_back(at(k * n / cap));
    return out;
  }

 private:
  Formula pick(std::size_t i) const { return i < older_.size() ? older_[i] : newest_[i - older_.size()]; }

  const std::vector<Formula>& older_;
  const std::vector<Formula>& newest_;
  std::vector<Formula> extra_;
  std::size_t pairs_ = 0;
};

}  // namespace

std::vector<Formula> enumerate_formulas(const Signature& sig, const TermUniverse& universe, std::size_t max_depth,
                                        std::size_t level_cap, std::size_t exhaustive_depth) {
  const std::string var = "x";
  std::vector<Formula> closed_older, closed_new{Formula::zero(), Formula::one()};
  for (const Formula& a : closed_atoms(sig, universe)) closed_new.push_back(a);

  // Open bodies per sort, always including the closed formulas.
  std::map<std::string, std::vector<Formula>> open_older, open_new;
  for (const auto& sort : sig.sorts) {
    auto& bodies = open_new[sort];
    for (const auto& rel : sig.relations) {
      if (rel.arg_sorts.empty()) continue;
      bool all_s = true;
      for (const auto& s : rel.arg_sorts) all_s = all_s && s == sort;
      if (all_s) bodies.push_back(Formula::atom(rel.name, std::vector<Term>(rel.arg_sorts.size(), Term::variable(var, sort))));
    }
    bodies.insert(bodies.end(), closed_new.begin(), closed_new.end());
  }

  std::vector<Formula> out = closed_new;
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const bool exhaustive = d <= exhaustive_depth;
    std::vector<Formula> quantified;
    for (const auto& [sort, bodies] : open_new) {
      for (const Formula& b : bodies) {
        if (free_vars(b).empty()) continue;
        quantified.push_back(Formula::forall(var, sort, b));
        quantified.push_back(Formula::exists(var, sort, b));
      }
    }
    Level closed_level(closed_older, closed_new, quantified);
    std::vector<Formula> closed_next = closed_level.sample(level_cap, exhaustive);

    std::map<std::string, std::vector<Formula>> open_next;
    for (const auto& sort : sig.sorts) {
      Level open_level(open_older[sort], open_new[sort], {});
      std::vector<Formula> next;
      for (Formula& f : open_level.sample(level_cap, false)) {
        if (!free_vars(f).empty()) next.push_back(std::move(f));
      }
      next.insert(next.end(), closed_next.begin(), closed_next.end());
      open_next[sort] = std::move(next);
      auto& older = open_older[sort];
      older.insert(older.end(), open_new[sort].begin(), open_new[sort].end());
    }

    out.insert(out.end(), closed_next.begin(), closed_next.end());
    closed_older.insert(closed_older.end(), closed_new.begin(), closed_new.end());
    closed_new = std::move(closed_next);
    open_new = std::move(open_next);
  }
  return out;
}

std::vector<SuiteCase> bundled_suite(const std::filesystem::path& data_dir) {
  const std::vector<std::pair<std::string, HeytingModel>> models{
      {"chain4", gen_chain(4)}, {"powerset2", gen_powerset(2)}, {"powerset3", gen_powerset(3)}};
  std::vector<SuiteCase> out;
  for (const auto& [model_id, model] : models) {
    for (const std::string theory_id : {"constants", "unary"}) {
      out.push_back({model_id, theory_id, model, data_dir / "models" / (model_id + ".cat"),
                     data_dir / "theories" / (theory_id + "-" + model_id + ".thy")});
    }
  }
  return out;
}

}  // namespace ldcat
