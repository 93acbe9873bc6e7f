// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "ldcat/error.hpp"
#include "ldcat/logic.hpp"
#include "ldcat/theory.hpp"

namespace ldcat {
namespace {

Signature sig() {
  return parse_signature(R"(
sort s
sort t
fun c : s
fun d : s
fun f : s * s -> t
fun g : s -> s
rel P : s
rel B : s
rel Q
rel A
rel T : t
)");
}

Term c() { return Term::apply("c", "s"); }
Term d() { return Term::apply("d", "s"); }
Term x() { return Term::variable("x", "s"); }

TEST(Parse, QuantifiedArrow) {
  const Formula f = parse_formula("forall x:s. (P(x) -> Q)", sig());
  EXPECT_EQ(f, Formula::forall("x", "s", Formula::arrow(Formula::atom("P", {x()}), Formula::atom("Q"))));
}

TEST(Parse, ExistsTimes) {
  const Formula f = parse_formula("exists x:s. (A & B(x))", sig());
  EXPECT_EQ(f, Formula::exists("x", "s", Formula::times(Formula::atom("A"), Formula::atom("B", {x()}))));
}

TEST(Parse, QuantifierBodyExtendsRight) {
  EXPECT_EQ(parse_formula("forall x:s. P(x) -> Q", sig()), parse_formula("forall x:s. (P(x) -> Q)", sig()));
}

TEST(Parse, Precedence) {
  const Formula a = Formula::atom("A"), q = Formula::atom("Q");
  EXPECT_EQ(parse_formula("A & Q | A -> Q -> A", sig()),
            Formula::arrow(Formula::plus(Formula::times(a, q), a), Formula::arrow(q, a)));
  EXPECT_EQ(parse_formula("A & (Q | 0) & 1", sig()),
            Formula::times(Formula::times(a, Formula::plus(q, Formula::zero())), Formula::one()));
}

TEST(Parse, NestedApplication) {
  EXPECT_EQ(parse_formula("T(f(c,g(d)))", sig()),
            Formula::atom("T", {Term::apply("f", "t", {c(), Term::apply("g", "s", {d()})})}));
}

TEST(Parse, WrongArgumentSortIsSortError) {
  const Signature s = parse_signature("sort s\nsort s'\nfun c : s\nfun f : s * s -> s'\nrel P : s\n");
  EXPECT_THROW(parse_formula("P(f(c,c))", s), SortError);
  EXPECT_THROW(parse_formula("P(c, c)", s), SortError);
}

TEST(Parse, UnknownAndSyntax) {
  EXPECT_THROW(parse_formula("Z(c)", sig()), UnknownSymbol);
  EXPECT_THROW(parse_formula("P(x)", sig()), UnknownSymbol);  // x is not in context
  EXPECT_NO_THROW(parse_formula("P(x)", sig(), {{"x", "s"}}));
  try {
    parse_formula("A &", sig());
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 4u);
  }
  EXPECT_THROW(parse_formula("(A", sig()), SyntaxError);
  EXPECT_THROW(parse_formula("forall x:nope. A", sig()), Error);
}

Formula random_formula(std::mt19937& rng, int depth, const std::vector<std::string>& bound) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 3 : 8);
  switch (pick(rng)) {
    case 0: return Formula::zero();
    case 1: return Formula::one();
    case 2: return Formula::atom("Q");
    case 3: {
      const Term t = bound.empty() || rng() % 2 ? (rng() % 2 ? c() : Term::apply("g", "s", {d()}))
                                                : Term::variable(bound[rng() % bound.size()], "s");
      return Formula::atom("P", {t});
    }
    case 4: return Formula::times(random_formula(rng, depth - 1, bound), random_formula(rng, depth - 1, bound));
    case 5: return Formula::plus(random_formula(rng, depth - 1, bound), random_formula(rng, depth - 1, bound));
    case 6: return Formula::arrow(random_formula(rng, depth - 1, bound), random_formula(rng, depth - 1, bound));
    default: {
      auto inner = bound;
      const std::string v = rng() % 2 ? "x" : "y";
      inner.push_back(v);
      const Formula body = random_formula(rng, depth - 1, inner);
      return rng() % 2 ? Formula::forall(v, "s", body) : Formula::exists(v, "s", body);
    }
  }
}

TEST(Print, RoundTripsThroughParser) {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, 4, {});
    const std::string text = to_string(f);
    EXPECT_EQ(parse_formula(text, sig()), f) << text;
  }
}

TEST(FreeVars, Examples) {
  EXPECT_TRUE(free_vars(Formula::forall("x", "s", Formula::atom("P", {x()}))).empty());
  const Formula mixed =
      Formula::times(Formula::atom("P", {x()}), Formula::exists("x", "s", Formula::atom("B", {x()})));
  EXPECT_EQ(free_vars(mixed), (std::set<Variable>{{"x", "s"}}));
  EXPECT_TRUE(free_vars(Formula::arrow(Formula::one(), Formula::zero())).empty());
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(Formula::atom("B", {x()}), "x", c()), Formula::atom("B", {c()}));
  const Formula bound = Formula::forall("x", "s", Formula::atom("B", {x()}));
  EXPECT_EQ(substitute(bound, "x", c()), bound);
  const Formula a = Formula::atom("A");
  EXPECT_EQ(substitute(Formula::times(a, Formula::atom("B", {x()})), "x", d()),
            Formula::times(a, Formula::atom("B", {d()})));
  EXPECT_THROW(substitute(Formula::atom("B", {x()}), "x", Term::apply("f", "t", {c(), c()})), SortMismatch);
}

TEST(Substitute, RemovesExactlyTheVariable) {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Formula body = random_formula(rng, 3, {"x", "y"});
    const Formula out = substitute(body, "x", c());
    auto expected = free_vars(body);
    expected.erase({"x", "s"});
    EXPECT_EQ(free_vars(out), expected) << to_string(body);
    EXPECT_LE(out.depth(), body.depth());
    EXPECT_EQ(out.depth(), body.depth());
  }
}

TEST(AlphaKey, IdentifiesRenamedBinders) {
  const Formula a = parse_formula("forall x:s. exists y:s. P(x) & P(y)", sig());
  const Formula b = parse_formula("forall y:s. exists x:s. P(y) & P(x)", sig());
  const Formula c2 = parse_formula("forall y:s. exists x:s. P(x) & P(y)", sig());
  EXPECT_EQ(alpha_key(a), alpha_key(b));
  EXPECT_NE(alpha_key(a), alpha_key(c2));
  EXPECT_NE(a, b);
}

TEST(Depth, CountsConnectives) {
  EXPECT_EQ(Formula::zero().depth(), 0u);
  EXPECT_EQ(parse_formula("A & Q -> A", sig()).depth(), 2u);
  EXPECT_EQ(parse_formula("forall x:s. P(x) | A", sig()).depth(), 2u);
}

}  // namespace
}  // namespace ldcat
