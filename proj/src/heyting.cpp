// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ldcat/heyting.hpp"

#include <algorithm>
#include <map>

#include "ldcat/error.hpp"

namespace ldcat {

HeytingModel HeytingModel::from_order(std::string id, std::vector<std::string> names, std::vector<char> leq) {
  const std::size_t n = names.size();
  if (n == 0 || leq.size() != n * n) throw MalformedInput("order table does not match the carrier");
  HeytingModel m;
  m.id_ = std::move(id);
  m.names_ = std::move(names);
  m.leq_ = std::move(leq);
  auto le = [&](std::size_t a, std::size_t b) { return m.leq_[a * n + b] != 0; };

  for (std::size_t a = 0; a < n; ++a) {
    if (!le(a, a)) throw MalformedInput("order is not reflexive at " + m.names_[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && le(a, b) && le(b, a)) throw MalformedInput("order is not antisymmetric");
      for (std::size_t c = 0; c < n; ++c) {
        if (le(a, b) && le(b, c) && !le(a, c)) throw MalformedInput("order is not transitive");
      }
    }
  }

  // Greatest element of `candidates` w.r.t. the order, if any.
  auto greatest = [&](const std::vector<Element>& candidates) -> std::optional<Element> {
    for (Element g : candidates) {
      if (std::all_of(candidates.begin(), candidates.end(), [&](Element x) { return le(x, g); })) return g;
    }
    return std::nullopt;
  };
  auto least = [&](const std::vector<Element>& candidates) -> std::optional<Element> {
    for (Element g : candidates) {
      if (std::all_of(candidates.begin(), candidates.end(), [&](Element x) { return le(g, x); })) return g;
    }
    return std::nullopt;
  };

  std::vector<Element> all(n);
  for (Element i = 0; i < n; ++i) all[i] = i;
  auto bottom = least(all);
  auto top = greatest(all);
  if (!bottom || !top) throw MalformedInput("order is not bounded");
  m.bottom_ = *bottom;
  m.top_ = *top;

  m.meet_.resize(n * n);
  m.join_.resize(n * n);
  m.impl_.resize(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      std::vector<Element> lower, upper;
      for (Element x = 0; x < n; ++x) {
        if (le(x, a) && le(x, b)) lower.push_back(x);
        if (le(a, x) && le(b, x)) upper.push_back(x);
      }
      auto meet = greatest(lower);
      auto join = least(upper);
      if (!meet || !join) throw MalformedInput("order is not a lattice at " + m.names_[a] + ", " + m.names_[b]);
      m.meet_[a * n + b] = *meet;
      m.join_[a * n + b] = *join;
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      std::vector<Element> below;
      for (Element x = 0; x < n; ++x) {
        if (le(m.meet_[x * n + a], b)) below.push_back(x);
      }
      auto impl = greatest(below);
      if (!impl) throw MalformedInput("no relative pseudo-complement " + m.names_[a] + " => " + m.names_[b]);
      m.impl_[a * n + b] = *impl;
    }
  }
  return m;
}

std::optional<HeytingModel::Element> HeytingModel::element(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

FinCategory HeytingModel::to_category() const {
  const std::size_t n = size();
  CategoryBuilder b;
  for (const auto& name : names_) b.add_object(name);
  std::vector<std::optional<ArrId>> arrow(n * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (!leq(i, j)) continue;
      const std::string name = i == j ? "id_" + names_[i] : names_[i] + "<=" + names_[j];
      arrow[i * n + j] = b.add_arrow(name, ObjId{i}, ObjId{j});
    }
  }
  for (Element i = 0; i < n; ++i) b.set_identity(ObjId{i}, *arrow[i * n + i]);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (!leq(i, j)) continue;
      for (Element k = 0; k < n; ++k) {
        if (leq(j, k)) b.set_composite(*arrow[j * n + k], *arrow[i * n + j], *arrow[i * n + k]);
      }
    }
  }
  return b.build();
}

HeytingModel gen_chain(std::size_t n) {
  if (n < 1) throw MalformedInput("a chain needs at least one element");
  if (n > 32) throw ScaleExceeded("chain of " + std::to_string(n) + " elements exceeds 32 objects");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<char> leq(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = i <= j;
  }
  return HeytingModel::from_order("chain-" + std::to_string(n), std::move(names), std::move(leq));
}

HeytingModel gen_powerset(std::size_t k) {
  if (k > 4) throw ScaleExceeded("powerset of a " + std::to_string(k) + "-set exceeds 16 objects");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  for (std::size_t s = 0; s < n; ++s) {
    std::string name = "{";
    for (std::size_t bit = 0; bit < k; ++bit) {
      if (s & (std::size_t{1} << bit)) name += (name.size() > 1 ? "," : "") + std::to_string(bit + 1);
    }
    names.push_back(name + "}");
  }
  std::vector<char> leq(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) leq[s * n + t] = (s & t) == s;
  }
  return HeytingModel::from_order("powerset-" + std::to_string(k), std::move(names), std::move(leq));
}

HeytingModel gen_diamond() {
  std::vector<std::string> names{"bot", "a", "b", "top"};
  // (x, y) in {0,1}^2 ordered componentwise: bot=(0,0), a=(1,0), b=(0,1), top=(1,1).
  const int coords[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<char> leq(16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) leq[i * 4 + j] = coords[i][0] <= coords[j][0] && coords[i][1] <= coords[j][1];
  }
  return HeytingModel::from_order("diamond", std::move(names), std::move(leq));
}

namespace {

struct Oracle {
  const HeytingModel& model;
  const TermUniverse& universe;
  std::map<std::string, HeytingModel::Element> atoms;
  std::vector<std::pair<std::string, Term>> env;

  Term resolve(const Term& t) const {
    if (t.is_variable()) {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == t.name) return it->second;
      }
      throw MalformedInput("oracle: unbound variable " + t.name);
    }
    Term out = t;
    for (auto& a : out.args) a = resolve(a);
    return out;
  }

  HeytingModel::Element eval(const Formula& f) {
    switch (f.kind()) {
      case Connective::Zero: return model.bottom();
      case Connective::One: return model.top();
      case Connective::Atom: {
        std::string key = f.relation();
        if (!f.args().empty()) {
          key += '(';
          for (std::size_t i = 0; i < f.args().size(); ++i) key += (i ? "," : "") + to_string(resolve(f.args()[i]));
          key += ')';
        }
        auto it = atoms.find(key);
        if (it == atoms.end()) throw MissingAtom("oracle: no value for atom " + key);
        return it->second;
      }
      case Connective::Times: return model.meet(eval(f.left()), eval(f.right()));
      case Connective::Plus: return model.join(eval(f.left()), eval(f.right()));
      case Connective::Arrow: return model.impl(eval(f.left()), eval(f.right()));
      case Connective::Forall:
      case Connective::Exists: {
        const bool all = f.kind() == Connective::Forall;
        HeytingModel::Element acc = all ? model.top() : model.bottom();
        for (const Term& t : universe.of(f.sort())) {
          env.emplace_back(f.var(), t);
          const auto v = eval(f.body());
          env.pop_back();
          acc = all ? model.meet(acc, v) : model.join(acc, v);
        }
        return acc;
      }
    }
    return model.bottom();
  }
};

}  // namespace

HeytingModel::Element oracle_interpret(const HeytingModel& model, const Theory& theory, const TermUniverse& universe,
                                       const Formula& f) {
  Oracle oracle{model, universe, {}, {}};
  for (const auto& a : theory.assignments) {
    auto e = model.element(a.object);
    if (!e) throw MalformedInput("oracle: unknown element '" + a.object + "'");
    oracle.atoms.emplace(to_string(a.atom), *e);
  }
  return oracle.eval(f);
}

}  // namespace ldcat
