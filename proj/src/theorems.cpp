// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ldcat/theorems.hpp"

#include "ldcat/error.hpp"

namespace ldcat {
namespace {

std::string obj(const FinCategory& c, ObjId o) { return c.name(o); }

std::string arr(const FinCategory& c, ArrId a) { return c.name(a); }

std::string swap_expr(const FinCategory& c, ObjId a, ObjId b) {
  return "swap(" + obj(c, a) + "," + obj(c, b) + ")";
}

}  // namespace

TracedArrow build_delta(const StructureTable& st, ObjId a, ObjId b, ObjId c) {
  const FinCategory& cat = st.category();
  const CoproductWitness& b_plus_c = st.coproduct(b, c);
  const ArrId id_a = cat.identity(a);
  const ArrId left = arrow_product(st, id_a, b_plus_c.inj1);
  const ArrId right = arrow_product(st, id_a, b_plus_c.inj2);
  const ArrId delta = copair(st, left, right);
  return {delta, "[" + arr(cat, id_a) + " x " + arr(cat, b_plus_c.inj1) + ", " + arr(cat, id_a) + " x " +
                     arr(cat, b_plus_c.inj2) + "] = " + arr(cat, delta)};
}

TracedArrow build_delta_inverse(const StructureTable& st, ObjId a, ObjId b, ObjId c) {
  const FinCategory& cat = st.category();
  const ObjId a_times_b = st.product(a, b).apex;
  const ObjId a_times_c = st.product(a, c).apex;
  const CoproductWitness& d = st.coproduct(a_times_b, a_times_c);
  const ObjId b_plus_c = st.coproduct(b, c).apex;

  const ArrId left = cat.compose(d.inj1, swap(st, b, a));   // B x A -> D
  const ArrId right = cat.compose(d.inj2, swap(st, c, a));  // C x A -> D
  const ArrId left_t = transpose(st, b, a, left);           // B -> D^A
  const ArrId right_t = transpose(st, c, a, right);         // C -> D^A
  const ArrId h = copair(st, left_t, right_t);              // B+C -> D^A
  const ArrId uncurried = theta(st, a, d.apex, h);          // (B+C) x A -> D
  const ArrId inverse = cat.compose(uncurried, swap(st, a, b_plus_c));

  const std::string j1 = arr(cat, d.inj1) + " . " + swap_expr(cat, b, a);
  const std::string j2 = arr(cat, d.inj2) + " . " + swap_expr(cat, c, a);
  return {inverse, "theta[" + obj(cat, a) + "]([transpose[" + obj(cat, a) + "](" + j1 + ") = " + arr(cat, left_t) +
                       ", transpose[" + obj(cat, a) + "](" + j2 + ") = " + arr(cat, right_t) + "] = " + arr(cat, h) +
                       ") = " + arr(cat, uncurried) + " . " + swap_expr(cat, a, b_plus_c) + " = " + arr(cat, inverse)};
}

DeltaCertificate certify_delta(const StructureTable& st, ObjId a, ObjId b, ObjId c) {
  const FinCategory& cat = st.category();
  DeltaCertificate cert{a, b, c, build_delta(st, a, b, c), build_delta_inverse(st, a, b, c)};
  const ArrId d = cert.delta.arrow;
  const ArrId inv = cert.delta_inverse.arrow;
  if (cat.dom(d) != cat.cod(inv) || cat.cod(d) != cat.dom(inv)) {
    throw ShapeMismatch("delta " + arr(cat, d) + " and its constructed inverse " + arr(cat, inv) +
                        " do not have opposite endpoints");
  }
  cert.inverse_after_delta = cat.compose(inv, d) == cat.identity(cat.dom(d));
  cert.delta_after_inverse = cat.compose(d, inv) == cat.identity(cat.dom(inv));
  return cert;
}

// ---------------------------------------------------------------------------

std::string FrobeniusInstance::label() const {
  return "A = " + to_string(a) + "; " + var + ":" + sort + "; B = " + to_string(b);
}

namespace {

void require_not_free(const FrobeniusInstance& inst) {
  if (!is_closed(inst.a)) throw ShapeMismatch("A must be closed in " + inst.label());
  for (const auto& [name, sort] : free_vars(inst.b)) {
    if (name != inst.var) throw ShapeMismatch("B has a free variable other than " + inst.var + " in " + inst.label());
  }
}

// The pieces of diagram (alpha) every construction below needs.
struct FrobeniusData {
  ObjId ma;
  ObjId exists_ab;
  ObjId exists_b;
  ObjId target;                   // MA x M(exists x. B)
  std::vector<ObjId> b_legs;      // M(B[t/x])
  std::vector<ObjId> ab_legs;     // MA x M(B[t/x])
  std::vector<ArrId> delta;       // M(B[t/x]) -> M(exists x. B)
  std::vector<ArrId> exi;         // MA x M(B[t/x]) -> M(exists x. A & B)
  std::vector<ArrId> q;           // id_MA x delta_t
  bool empty_diagram = false;
};

FrobeniusData frobenius_data(Interpretation& interp, const FrobeniusInstance& inst) {
  require_not_free(inst);
  const StructureTable& st = interp.structure();
  const FinCategory& c = st.category();
  FrobeniusData d;
  d.ma = interp.interpret(inst.a);
  const QuantifierObject& qab = interp.quantifier_object(inst.exists_a_times_b());
  const QuantifierObject& qb = interp.quantifier_object(inst.exists_b());
  d.exists_ab = qab.object;
  d.exists_b = qb.object;
  d.target = st.product(d.ma, d.exists_b).apex;
  d.exi = qab.family.legs;
  d.delta = qb.family.legs;
  d.empty_diagram = qab.empty_diagram;
  for (const Term& t : interp.universe().of(inst.sort)) {
    const ObjId leg = interp.interpret(substitute(inst.b, inst.var, t));
    d.b_legs.push_back(leg);
    d.ab_legs.push_back(st.product(d.ma, leg).apex);
  }
  for (std::size_t i = 0; i < d.delta.size(); ++i) {
    d.q.push_back(arrow_product(st, c.identity(d.ma), d.delta[i]));
    if (c.dom(d.q[i]) != c.dom(d.exi[i])) {
      throw ShapeMismatch("leg " + std::to_string(i) + " of " + inst.label() + ": exI starts at " +
                          c.name(c.dom(d.exi[i])) + " but id x delta starts at " + c.name(c.dom(d.q[i])));
    }
  }
  return d;
}

// The unique m : from -> to with m . in[i] = out[i] for all i.
ArrId unique_mediator(const FinCategory& c, ObjId from, ObjId to, const std::vector<ArrId>& in,
                      const std::vector<ArrId>& out, const std::string& what) {
  std::optional<ArrId> found;
  std::size_t count = 0;
  for (ArrId m : c.hom(from, to)) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < in.size(); ++i) ok = c.compose(m, in[i]) == out[i];
    if (ok) {
      ++count;
      if (!found) found = m;
    }
  }
  if (count == 0) throw NoMediator("no " + what + " : " + c.name(from) + " -> " + c.name(to));
  if (count > 1) {
    throw MultipleMediators(std::to_string(count) + " candidates for " + what + " : " + c.name(from) + " -> " +
                            c.name(to));
  }
  return *found;
}

std::string legs_text(const FinCategory& c, const std::vector<ArrId>& legs) {
  std::string out = "{";
  for (std::size_t i = 0; i < legs.size(); ++i) out += (i ? ", " : "") + c.name(legs[i]);
  return out + "}";
}

TracedArrow alpha_from(const Interpretation& interp, const FrobeniusData& d) {
  const FinCategory& c = interp.category();
  const ArrId alpha = unique_mediator(c, d.exists_ab, d.target, d.exi, d.q, "alpha");
  return {alpha, "unique m with m . exI_t = id x delta_t, exI = " + legs_text(c, d.exi) + ", id x delta = " +
                     legs_text(c, d.q) + "; m = " + c.name(alpha)};
}

TracedArrow gamma_from(const Interpretation& interp, const FrobeniusData& d, const ConeFamily& p) {
  const StructureTable& st = interp.structure();
  const FinCategory& c = st.category();
  if (p.legs.size() != d.b_legs.size()) throw ShapeMismatch("cocone has the wrong number of legs");
  const ObjId exponential = st.exponential(d.ma, p.vertex).apex;
  std::vector<ArrId> transposed;
  std::string expr = "unique g with g . delta_t = transpose[" + c.name(d.ma) + "](p_t . swap), p = " +
                     legs_text(c, p.legs) + ", transposes = {";
  for (std::size_t i = 0; i < p.legs.size(); ++i) {
    if (c.dom(p.legs[i]) != d.ab_legs[i] || c.cod(p.legs[i]) != p.vertex) {
      throw ShapeMismatch("cocone leg " + c.name(p.legs[i]) + " does not run " + c.name(d.ab_legs[i]) + " -> " +
                          c.name(p.vertex));
    }
    const ArrId swapped = c.compose(p.legs[i], swap(st, d.b_legs[i], d.ma));
    transposed.push_back(transpose(st, d.b_legs[i], d.ma, swapped));
    expr += (i ? ", " : "") + c.name(transposed.back());
  }
  const ArrId gamma = unique_mediator(c, d.exists_b, exponential, d.delta, transposed, "gamma");
  return {gamma, expr + "}; g = " + c.name(gamma)};
}

TracedArrow beta_from(const Interpretation& interp, const FrobeniusData& d, const ConeFamily& p,
                      const TracedArrow& gamma) {
  const StructureTable& st = interp.structure();
  const FinCategory& c = st.category();
  const ArrId uncurried = theta(st, d.ma, p.vertex, gamma.arrow);
  const ArrId beta = c.compose(uncurried, swap(st, d.ma, d.exists_b));
  return {beta, "theta[" + c.name(d.ma) + "](" + c.name(gamma.arrow) + ") = " + c.name(uncurried) + " . swap(" +
                    c.name(d.ma) + "," + c.name(d.exists_b) + ") = " + c.name(beta)};
}

}  // namespace

TracedArrow build_alpha(Interpretation& interp, const FrobeniusInstance& inst) {
  return alpha_from(interp, frobenius_data(interp, inst));
}

TracedArrow build_gamma(Interpretation& interp, const FrobeniusInstance& inst, const ConeFamily& p) {
  return gamma_from(interp, frobenius_data(interp, inst), p);
}

TracedArrow build_beta(Interpretation& interp, const FrobeniusInstance& inst, const ConeFamily& p,
                       const TracedArrow& gamma) {
  return beta_from(interp, frobenius_data(interp, inst), p, gamma);
}

FrobeniusCertificate verify_frobenius(Interpretation& interp, const FrobeniusInstance& inst) {
  const FrobeniusData d = frobenius_data(interp, inst);
  const FinCategory& c = interp.category();

  FrobeniusCertificate cert;
  cert.instance = inst;
  cert.source = d.exists_ab;
  cert.target = d.target;
  cert.alpha = alpha_from(interp, d);
  const ConeFamily exi{d.exists_ab, d.exi};
  cert.gamma = gamma_from(interp, d, exi);
  cert.beta = beta_from(interp, d, exi, cert.gamma);
  if (d.empty_diagram) cert.warnings.push_back("empty diagram: sort " + inst.sort + " has no closed terms");

  cert.naturality = true;
  for (std::size_t i = 0; i < d.exi.size(); ++i) {
    cert.naturality = cert.naturality && c.compose(cert.alpha.arrow, d.exi[i]) == d.q[i];
  }

  const ArrId alpha = cert.alpha.arrow;
  const ArrId beta = cert.beta.arrow;
  const ArrId ab = c.compose(alpha, beta);
  const ArrId ba = c.compose(beta, alpha);
  cert.alpha_after_beta = ab == c.identity(d.target);
  cert.beta_after_alpha = ba == c.identity(d.exists_ab);
  if (!cert.alpha_after_beta || !cert.beta_after_alpha) {
    const bool first = !cert.alpha_after_beta;
    throw CertificateFailure(inst.label() + ": " +
                             (first ? "alpha . beta = " + c.name(ab) + " != " + c.name(c.identity(d.target))
                                    : "beta . alpha = " + c.name(ba) + " != " + c.name(c.identity(d.exists_ab))) +
                             "; alpha: " + cert.alpha.expr + "; gamma: " + cert.gamma.expr +
                             "; beta: " + cert.beta.expr);
  }

  // Initiality of MA x M(exists x. B) among reachable cocone vertices.
  InitialitySweep& sweep = cert.initiality;
  for (ObjId v : interp.reach().members) {
    ++sweep.vertices;
    bool truncated = false;
    const auto families = cone_families(c, v, d.ab_legs, Quantifier::Exists, interp.limits().family_cap, &truncated);
    sweep.truncated = sweep.truncated || truncated;
    for (const ConeFamily& p : families) {
      ++sweep.families;
      try {
        const ArrId m = unique_mediator(c, d.target, v, d.q, p.legs, "mediator into " + c.name(v));
        const TracedArrow g = gamma_from(interp, d, p);
        const TracedArrow b = beta_from(interp, d, p, g);
        if (b.arrow != m) {
          throw NoMediator("theta(gamma) = " + c.name(b.arrow) + " differs from the mediator " + c.name(m));
        }
      } catch (const Error& e) {
        sweep.pass = false;
        sweep.failure = "vertex " + c.name(v) + ", cocone " + legs_text(c, p.legs) + ": " + e.what();
        return cert;
      }
    }
  }
  if (sweep.truncated) cert.warnings.push_back("initiality sweep truncated at the family cap");
  return cert;
}

std::vector<FrobeniusInstance> default_instances(const Signature& sig, const TermUniverse& universe) {
  std::vector<Formula> as{Formula::zero(), Formula::one()};
  for (const Formula& atom : closed_atoms(sig, universe)) as.push_back(atom);

  std::optional<Formula> constant_body;
  for (const auto& rel : sig.relations) {
    if (rel.arg_sorts.empty()) {
      constant_body = Formula::atom(rel.name);
      break;
    }
  }

  std::vector<FrobeniusInstance> out;
  for (const auto& sort : sig.sorts) {
    const std::string var = "x";
    std::vector<Formula> bodies;
    for (const auto& rel : sig.relations) {
      if (rel.arg_sorts.empty()) continue;
      bool all_s = true;
      for (const auto& s : rel.arg_sorts) all_s = all_s && s == sort;
      if (all_s) bodies.push_back(Formula::atom(rel.name, std::vector<Term>(rel.arg_sorts.size(), Term::variable(var, sort))));
    }
    if (bodies.empty()) continue;
    if (bodies.size() >= 2) {
      bodies.push_back(Formula::arrow(bodies[0], bodies[1]));
      bodies.push_back(Formula::plus(bodies[0], bodies[1]));
    }
    bodies.push_back(constant_body.value_or(Formula::one()));
    for (const Formula& b : bodies) {
      for (const Formula& a : as) out.push_back({a, var, sort, b});
    }
  }
  return out;
}

}  // namespace ldcat
