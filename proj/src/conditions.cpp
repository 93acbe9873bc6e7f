// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ldcat/conditions.hpp"

#include <functional>
#include <set>

#include "ldcat/error.hpp"

namespace ldcat {
namespace {

constexpr std::size_t kMaxDetails = 12;

// Calls `visit` on f and on every closed instance of its subformulas,
// descending into quantifier bodies once per closed term.
void for_each_instance(const Formula& f, const TermUniverse& universe, std::set<std::string>& seen,
                       const std::function<void(const Formula&)>& visit) {
  if (!seen.insert(alpha_key(f)).second) return;
  visit(f);
  if (f.is_binary()) {
    for_each_instance(f.left(), universe, seen, visit);
    for_each_instance(f.right(), universe, seen, visit);
  } else if (f.is_quantifier()) {
    for (const Term& t : universe.of(f.sort())) {
      for_each_instance(substitute(f.body(), f.var(), t), universe, seen, visit);
    }
  }
}

}  // namespace

void ConditionVerdict::fail(std::string detail) {
  pass = false;
  if (details.size() < kMaxDetails) {
    details.push_back(std::move(detail));
  } else if (details.size() == kMaxDetails) {
    details.push_back("...");
  }
}

bool ConditionReport::all_pass() const {
  for (const auto& c : conditions) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<Formula> checked_formulas(const Interpretation& interp, const std::vector<FrobeniusInstance>& instances) {
  std::vector<Formula> out = interp.signature().axioms;
  out.insert(out.end(), interp.theory().formulas.begin(), interp.theory().formulas.end());
  for (const auto& inst : instances) {
    out.push_back(inst.a);
    out.push_back(inst.exists_b());
    out.push_back(inst.exists_a_times_b());
    out.push_back(Formula::forall(inst.var, inst.sort, inst.b));
  }
  return out;
}

ConditionReport check_conditions(Interpretation& interp, const std::vector<Formula>& checked,
                                 const std::vector<FrobeniusInstance>& instances) {
  const StructureTable& st = interp.structure();
  const FinCategory& c = st.category();
  ConditionReport report;
  const char* titles[7] = {"finite products",
                           "finite coproducts",
                           "exponentiation",
                           "distributivity",
                           "quantifier objects",
                           "interpretation clauses",
                           "Frobenius isomorphism"};
  for (int i = 0; i < 7; ++i) {
    report.conditions[i].number = i + 1;
    report.conditions[i].title = titles[i];
  }
  auto& c1 = report.conditions[0];
  auto& c2 = report.conditions[1];
  auto& c3 = report.conditions[2];
  auto& c4 = report.conditions[3];
  auto& c5 = report.conditions[4];
  auto& c6 = report.conditions[5];
  auto& c7 = report.conditions[6];

  if (!st.has_terminal()) c1.fail(st.terminal_failure());
  if (!st.has_initial()) c2.fail(st.initial_failure());
  for (ObjId a : c.objects()) {
    for (ObjId b : c.objects()) {
      ++c1.checked;
      ++c2.checked;
      ++c3.checked;
      if (!st.has_product(a, b)) c1.fail("(" + c.name(a) + ", " + c.name(b) + "): " + st.product_failure(a, b));
      if (!st.has_coproduct(a, b)) c2.fail("(" + c.name(a) + ", " + c.name(b) + "): " + st.coproduct_failure(a, b));
      if (!st.has_exponential(a, b)) {
        c3.fail("(" + c.name(a) + ", " + c.name(b) + "): " + st.exponential_failure(a, b));
      }
    }
  }

  const auto& reach = interp.reach().members;
  for (ObjId a : reach) {
    for (ObjId b : reach) {
      for (ObjId cc : reach) {
        ++c4.checked;
        const std::string triple = "(" + c.name(a) + ", " + c.name(b) + ", " + c.name(cc) + ")";
        try {
          const TracedArrow delta = build_delta(st, a, b, cc);
          if (!find_inverse(c, delta.arrow)) c4.fail(triple + ": delta " + c.name(delta.arrow) + " has no inverse");
        } catch (const Error& e) {
          c4.fail(triple + ": " + e.what());
        }
      }
    }
  }

  for (const Formula& a : interp.unassigned_atoms()) c6.fail("M is undefined on " + to_string(a));
  if (!st.has_initial()) c6.fail("M(0) has no initial object to denote");
  if (!st.has_terminal()) c6.fail("M(1) has no terminal object to denote");

  std::set<std::string> seen;
  for (const Formula& f : checked) {
    for_each_instance(f, interp.universe(), seen, [&](const Formula& g) {
      if (g.is_quantifier()) {
        ++c5.checked;
        try {
          interp.quantifier_object(g);
        } catch (const Error& e) {
          c5.fail(e.what());
        }
      }

      ++c6.checked;
      try {
        const ObjId value = interp.interpret(g);
        bool holds = true;
        switch (g.kind()) {
          case Connective::Zero: holds = value == st.initial().obj; break;
          case Connective::One: holds = value == st.terminal().obj; break;
          case Connective::Atom: holds = interp.atoms().at(to_string(g)) == value; break;
          case Connective::Times:
            holds = value == st.product(interp.interpret(g.left()), interp.interpret(g.right())).apex;
            break;
          case Connective::Plus:
            holds = value == st.coproduct(interp.interpret(g.left()), interp.interpret(g.right())).apex;
            break;
          case Connective::Arrow:
            holds = value == st.exponential(interp.interpret(g.left()), interp.interpret(g.right())).apex;
            break;
          case Connective::Forall:
          case Connective::Exists: {
            const QuantifierObject& q = interp.quantifier_object(g);
            const QuantifierDiagram d = interp.build_diagram(g.body(), g.var(), g.sort());
            holds = q.object == value &&
                    is_quantifier_object(c, interp.reach().members,
                                         g.kind() == Connective::Forall ? Quantifier::Forall : Quantifier::Exists,
                                         d.objects, q.family, interp.limits());
            break;
          }
        }
        if (!holds) c6.fail("clause fails for " + to_string(g) + " = " + c.name(value));
      } catch (const Error& e) {
        c6.fail(to_string(g) + ": " + e.what());
      }
    });
  }

  for (const auto& inst : instances) {
    ++c7.checked;
    try {
      const TracedArrow alpha = build_alpha(interp, inst);
      report.alphas.emplace_back(inst.label(), alpha.arrow);
      if (!find_inverse(c, alpha.arrow)) c7.fail(inst.label() + ": alpha " + c.name(alpha.arrow) + " has no inverse");
    } catch (const Error& e) {
      report.alphas.emplace_back(inst.label(), std::nullopt);
      c7.fail(inst.label() + ": " + e.what());
    }
  }
  return report;
}

}  // namespace ldcat
