// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "ldcat/error.hpp"
#include "ldcat/suite.hpp"
#include "ldcat/theorems.hpp"
#include "support.hpp"

namespace ldcat {
namespace {

using testing::b4;
using testing::h2;
using testing::obj;
using testing::subset_mask;

TEST(Delta, H2TopBotBot) {
  const StructureTable st = StructureTable::discover(h2());
  const FinCategory& c = st.category();
  const TracedArrow d = build_delta(st, obj(c, "top"), obj(c, "bot"), obj(c, "bot"));
  EXPECT_EQ(d.arrow, c.identity(obj(c, "bot")));
  EXPECT_FALSE(d.expr.empty());
}

TEST(Delta, B4Example) {
  const StructureTable st = StructureTable::discover(b4());
  const FinCategory& c = st.category();
  const TracedArrow d = build_delta(st, obj(c, "{1}"), obj(c, "{2}"), obj(c, "{1,2}"));
  EXPECT_EQ(d.arrow, c.identity(obj(c, "{1}")));
}

TEST(Delta, EndpointsOfRepeatedSummand) {
  const StructureTable st = StructureTable::discover(gen_chain(4).to_category());
  const FinCategory& c = st.category();
  for (ObjId a : c.objects()) {
    for (ObjId b : c.objects()) {
      const TracedArrow d = build_delta(st, a, b, b);
      const ObjId ab = st.product(a, b).apex;
      EXPECT_EQ(c.dom(d.arrow), st.coproduct(ab, ab).apex);
      EXPECT_EQ(c.cod(d.arrow), st.product(a, st.coproduct(b, b).apex).apex);
    }
  }
}

// Both endpoints are checked against the distributive law on bitmasks.
TEST(Delta, InverseOnEveryTriple) {
  for (const FinCategory& base : {h2(), b4(), gen_powerset(3).to_category()}) {
    const StructureTable st = StructureTable::discover(base);
    const FinCategory& c = st.category();
    const bool sets = c.name(c.objects()[0]) == "{}";
    std::size_t n = 0;
    for (ObjId a : c.objects()) {
      for (ObjId b : c.objects()) {
        for (ObjId x : c.objects()) {
          const DeltaCertificate cert = certify_delta(st, a, b, x);
          EXPECT_TRUE(cert.ok());
          EXPECT_TRUE(mutually_inverse(c, cert.delta.arrow, cert.delta_inverse.arrow));
          if (sets) {
            const unsigned ma = subset_mask(c.name(a)), mb = subset_mask(c.name(b)), mc = subset_mask(c.name(x));
            EXPECT_EQ(subset_mask(c.name(c.dom(cert.delta.arrow))), (ma & mb) | (ma & mc));
            EXPECT_EQ(subset_mask(c.name(c.cod(cert.delta.arrow))), ma & (mb | mc));
          }
          ++n;
        }
      }
    }
    EXPECT_EQ(n, c.object_count() * c.object_count() * c.object_count());
  }
}

TEST(Delta, InitialSummands) {
  const StructureTable st = StructureTable::discover(b4());
  const FinCategory& c = st.category();
  const ObjId zero = st.initial().obj;
  for (ObjId a : c.objects()) {
    const DeltaCertificate cert = certify_delta(st, a, zero, zero);
    EXPECT_TRUE(cert.ok());
    EXPECT_EQ(c.cod(cert.delta.arrow), st.product(a, zero).apex);
  }
}

const std::string kRunning = R"(
sort s
fun c : s
fun d : s
rel B : s
rel P
interp B(c) = {2}
interp B(d) = {1,2}
interp P = {1}
)";

Interpretation running() { return build_interpretation(b4(), parse_theory(kRunning), {}, 3); }

FrobeniusInstance instance(const Interpretation& in, const std::string& a, const std::string& b) {
  return {parse_formula(a, in.signature()), "x", "s", parse_formula(b, in.signature(), {{"x", "s"}})};
}

TEST(Frobenius, RunningExampleAlphaIsIdentity) {
  Interpretation in = running();
  const FrobeniusInstance inst = instance(in, "P", "B(x)");
  const FinCategory& c = in.category();
  EXPECT_EQ(in.interpret(inst.exists_a_times_b()), obj(c, "{1}"));
  const TracedArrow alpha = build_alpha(in, inst);
  EXPECT_EQ(alpha.arrow, c.identity(obj(c, "{1}")));
  const FrobeniusCertificate cert = verify_frobenius(in, inst);
  EXPECT_TRUE(cert.ok());
  EXPECT_EQ(cert.target, obj(c, "{1}"));
  EXPECT_GT(cert.initiality.families, 0u);
}

TEST(Frobenius, GammaForOwnCoconeGivesIdentity) {
  Interpretation in = running();
  const FrobeniusInstance inst = instance(in, "P", "B(x)");
  const FinCategory& c = in.category();
  const ObjId target = obj(c, "{1}");
  // p_t = id x delta_t into MA x M(exists x. B) itself.
  const QuantifierObject& qb = in.quantifier_object(inst.exists_b());
  ConeFamily p{target, {}};
  for (ArrId d : qb.family.legs) {
    p.legs.push_back(arrow_product(in.structure(), c.identity(obj(c, "{1}")), d));
  }
  const TracedArrow gamma = build_gamma(in, inst, p);
  const TracedArrow beta = build_beta(in, inst, p, gamma);
  EXPECT_EQ(beta.arrow, c.identity(target));
  EXPECT_EQ(c.cod(gamma.arrow), in.structure().exponential(obj(c, "{1}"), target).apex);
}

TEST(Frobenius, UnitAndConstantInstances) {
  Interpretation in = running();
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"1", "B(x)"}, {"1", "P"}, {"P", "P"}, {"0", "B(x)"}, {"P", "B(x) -> 0"}}) {
    const FrobeniusCertificate cert = verify_frobenius(in, instance(in, a, b));
    EXPECT_TRUE(cert.ok()) << a << " " << b;
    EXPECT_TRUE(cert.warnings.empty());
  }
}

TEST(Frobenius, ConstantDiagramCollapses) {
  Interpretation in = running();
  const FrobeniusCertificate cert = verify_frobenius(in, instance(in, "P", "P"));
  EXPECT_EQ(cert.alpha.arrow, in.category().identity(cert.source));
}

TEST(Frobenius, EmptyUniverseIsFlagged) {
  Interpretation in =
      build_interpretation(b4(), parse_theory("sort s\nsort e\nfun c : s\nrel B : e\nrel P\ninterp P = {1}\n"), {}, 3);
  const FrobeniusInstance inst{Formula::atom("P"), "y", "e", Formula::atom("B", {Term::variable("y", "e")})};
  const FrobeniusCertificate cert = verify_frobenius(in, inst);
  EXPECT_TRUE(cert.ok());
  EXPECT_EQ(cert.source, obj(in.category(), "{}"));
  ASSERT_FALSE(cert.warnings.empty());
}

TEST(Frobenius, RejectsFreeVariableInA) {
  Interpretation in = running();
  const FrobeniusInstance inst{Formula::atom("B", {Term::variable("x", "s")}), "x", "s", Formula::atom("P")};
  EXPECT_THROW(verify_frobenius(in, inst), ShapeMismatch);
}

TEST(Frobenius, DefaultInstancesOnBundledSuite) {
  for (const auto& sc : bundled_suite(LDCAT_DATA_DIR)) {
    Interpretation in = build_interpretation(load_category(sc.model_file), load_theory(sc.theory_file), {}, 3);
    const auto instances = default_instances(in.signature(), in.universe());
    EXPECT_GE(instances.size(), 12u);
    for (const auto& inst : instances) {
      const FrobeniusCertificate cert = verify_frobenius(in, inst);
      EXPECT_TRUE(cert.ok()) << sc.model_id << " " << inst.label();
      EXPECT_TRUE(cert.naturality);
    }
  }
}

}  // namespace
}  // namespace ldcat
