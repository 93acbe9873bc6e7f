// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "ldcat/error.hpp"
#include "ldcat/structure.hpp"
#include "support.hpp"

namespace ldcat {
namespace {

using testing::arr;
using testing::b4;
using testing::h2;
using testing::obj;
using testing::subset_mask;
using testing::subset_name;

TEST(Product, H2Examples) {
  const FinCategory c = h2();
  const ProductWitness p = find_product(c, obj(c, "top"), obj(c, "bot"));
  EXPECT_EQ(p.apex, obj(c, "bot"));
  EXPECT_EQ(p.proj1, arr(c, "u"));
  EXPECT_EQ(p.proj2, arr(c, "id_bot"));
  EXPECT_EQ(find_product(c, obj(c, "top"), obj(c, "top")).apex, obj(c, "top"));
}

TEST(Coproduct, TerminalInitial) {
  const FinCategory c = h2();
  EXPECT_EQ(find_terminal(c).obj, obj(c, "top"));
  EXPECT_EQ(find_initial(c).obj, obj(c, "bot"));
  const FinCategory one = parse_category("object o\nid o = auto\n");
  EXPECT_EQ(find_initial(one).obj, obj(one, "o"));
  EXPECT_EQ(find_terminal(one).obj, obj(one, "o"));
}

TEST(Exponential, H2Examples) {
  const StructureTable st = StructureTable::discover(h2());
  const FinCategory& c = st.category();
  const ExponentialWitness e = find_exponential(st, obj(c, "top"), obj(c, "bot"));
  EXPECT_EQ(e.apex, obj(c, "bot"));
  EXPECT_EQ(e.eval, arr(c, "id_bot"));
  EXPECT_EQ(find_exponential(st, obj(c, "bot"), obj(c, "bot")).apex, obj(c, "top"));
}

// Powerset lattices checked against bitwise set operations on the names.
class PowersetStructure : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PowersetStructure, MatchesSetOperations) {
  const StructureTable st = StructureTable::discover(gen_powerset(GetParam()).to_category());
  const FinCategory& c = st.category();
  const unsigned full = (1u << GetParam()) - 1;
  EXPECT_EQ(c.name(st.terminal().obj), subset_name(full));
  EXPECT_EQ(c.name(st.initial().obj), "{}");
  for (ObjId a : c.objects()) {
    for (ObjId b : c.objects()) {
      const unsigned ma = subset_mask(c.name(a)), mb = subset_mask(c.name(b));
      EXPECT_EQ(c.name(st.product(a, b).apex), subset_name(ma & mb));
      EXPECT_EQ(c.name(st.coproduct(a, b).apex), subset_name(ma | mb));
      EXPECT_EQ(c.name(st.exponential(a, b).apex), subset_name((~ma | mb) & full));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, PowersetStructure, ::testing::Values(1, 2, 3));

TEST(Structure, B4Examples) {
  const StructureTable st = StructureTable::discover(b4());
  const FinCategory& c = st.category();
  EXPECT_EQ(c.name(st.product(obj(c, "{1}"), obj(c, "{2}")).apex), "{}");
  EXPECT_EQ(c.name(st.coproduct(obj(c, "{1}"), obj(c, "{2}")).apex), "{1,2}");
  EXPECT_EQ(c.name(st.exponential(obj(c, "{1}"), obj(c, "{2}")).apex), "{2}");
  EXPECT_EQ(pair(st, arr(c, "{}<={1}"), arr(c, "{}<={2}")), arr(c, "id_{}"));
}

TEST(Structure, VeeLacksProductsAndExponentials) {
  const StructureTable st = StructureTable::discover(testing::vee());
  const FinCategory& c = st.category();
  EXPECT_FALSE(st.has_terminal());
  EXPECT_FALSE(st.has_coproduct(obj(c, "a"), obj(c, "b")));
  EXPECT_TRUE(st.has_product(obj(c, "a"), obj(c, "b")));
  // a => bot is b, but bot => a would have to be a top element.
  EXPECT_EQ(st.exponential(obj(c, "a"), obj(c, "bot")).apex, obj(c, "b"));
  EXPECT_FALSE(st.has_exponential(obj(c, "bot"), obj(c, "a")));
  EXPECT_FALSE(st.exponential_failure(obj(c, "bot"), obj(c, "a")).empty());
  EXPECT_THROW(st.terminal(), NoSuchStructure);
  EXPECT_THROW(find_coproduct(c, obj(c, "a"), obj(c, "b")), NoSuchStructure);
}

TEST(Structure, NonThinMonoidHasNoTerminal) {
  const FinCategory c = parse_category(R"(
object o
arrow e : o -> o
arrow g : o -> o
id o = e
compose e . e = e
compose e . g = g
compose g . e = g
compose g . g = e
)");
  EXPECT_THROW(find_terminal(c), NoSuchStructure);
  // o x o would need a unique pairing for each of the four pairs of arrows.
  EXPECT_THROW(find_product(c, obj(c, "o"), obj(c, "o")), NoSuchStructure);
}

TEST(Canonical, H2Examples) {
  const StructureTable st = StructureTable::discover(h2());
  const FinCategory& c = st.category();
  EXPECT_EQ(pair(st, arr(c, "id_bot"), arr(c, "u")), arr(c, "id_bot"));
  EXPECT_EQ(copair(st, arr(c, "u"), arr(c, "id_top")), arr(c, "id_top"));
  EXPECT_EQ(arrow_product(st, arr(c, "u"), arr(c, "id_top")), arr(c, "u"));
  EXPECT_EQ(arrow_product(st, arr(c, "id_top"), arr(c, "id_bot")), arr(c, "id_bot"));
  EXPECT_THROW(pair(st, arr(c, "u"), arr(c, "id_top")), ShapeMismatch);
}

TEST(Canonical, ArrowProductOfIdentitiesIsIdentity) {
  const StructureTable st = StructureTable::discover(gen_powerset(3).to_category());
  const FinCategory& c = st.category();
  for (ObjId a : c.objects()) {
    for (ObjId b : c.objects()) {
      EXPECT_EQ(arrow_product(st, c.identity(a), c.identity(b)), c.identity(st.product(a, b).apex));
      const ArrId s = swap(st, a, b);
      EXPECT_EQ(c.compose(swap(st, b, a), s), c.identity(st.product(a, b).apex));
    }
  }
}

TEST(Transpose, B4Example) {
  const StructureTable st = StructureTable::discover(b4());
  const FinCategory& c = st.category();
  const ObjId w = obj(c, "{2}"), a = obj(c, "{1}"), target = obj(c, "{2}");
  const ArrId f = c.hom(st.product(w, a).apex, target)[0];
  EXPECT_EQ(c.name(c.dom(f)), "{}");
  EXPECT_EQ(transpose(st, w, a, f), arr(c, "id_{2}"));
}

TEST(Transpose, EvalTransposesToIdentity) {
  const StructureTable st = StructureTable::discover(gen_chain(4).to_category());
  const FinCategory& c = st.category();
  for (ObjId a : c.objects()) {
    for (ObjId t : c.objects()) {
      const ExponentialWitness& e = st.exponential(a, t);
      EXPECT_EQ(transpose(st, e.apex, a, e.eval), c.identity(e.apex));
    }
  }
}

TEST(Transpose, BijectionOnEveryHomSet) {
  for (const FinCategory& base : {h2(), b4(), gen_chain(4).to_category(), gen_powerset(3).to_category()}) {
    const StructureTable st = StructureTable::discover(base);
    const FinCategory& c = st.category();
    std::size_t checked = 0;
    for (ObjId w : c.objects()) {
      for (ObjId a : c.objects()) {
        for (ObjId t : c.objects()) {
          for (ArrId f : c.hom(st.product(w, a).apex, t)) {
            EXPECT_EQ(theta(st, a, t, transpose(st, w, a, f)), f);
            ++checked;
          }
          for (ArrId g : c.hom(w, st.exponential(a, t).apex)) {
            EXPECT_EQ(transpose(st, w, a, theta(st, a, t, g)), g);
          }
        }
      }
    }
    EXPECT_GT(checked, 0u);
  }
}

}  // namespace
}  // namespace ldcat
