// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ldcat/error.hpp"
#include "ldcat/theory.hpp"

namespace ldcat {
namespace {

std::vector<std::string> names(const std::vector<Term>& ts) {
  std::vector<std::string> out;
  for (const Term& t : ts) out.push_back(to_string(t));
  return out;
}

// Terms of `sort` of nesting depth <= d, by direct recursion on the text.
std::set<std::string> naive_terms(const Signature& sig, const std::string& sort, std::size_t d) {
  std::set<std::string> out;
  if (d == 0) return out;
  for (const auto& fn : sig.functions) {
    if (fn.result_sort != sort) continue;
    std::vector<std::string> partial{""};
    for (const auto& arg : fn.arg_sorts) {
      std::vector<std::string> next;
      for (const auto& p : partial) {
        for (const auto& t : naive_terms(sig, arg, d - 1)) next.push_back(p + (p.empty() ? "" : ",") + t);
      }
      partial = std::move(next);
    }
    for (const auto& p : partial) out.insert(fn.arg_sorts.empty() ? fn.name : fn.name + "(" + p + ")");
  }
  return out;
}

TEST(Universe, ConstantsSaturate) {
  const Signature sig = parse_signature("sort s\nfun c : s\nfun d : s\n");
  const TermUniverse u = enumerate_closed_terms(sig, 1);
  EXPECT_EQ(names(u.of("s")), (std::vector<std::string>{"c", "d"}));
  EXPECT_TRUE(u.saturated);
}

TEST(Universe, UnaryFunctionIsCut) {
  const Signature sig = parse_signature("sort s\nfun c : s\nfun f : s -> s\n");
  const TermUniverse u = enumerate_closed_terms(sig, 2);
  EXPECT_EQ(names(u.of("s")), (std::vector<std::string>{"c", "f(c)"}));
  EXPECT_FALSE(u.saturated);
}

TEST(Universe, EmptySortIsFlagged) {
  const Signature sig = parse_signature("sort s\nsort e\nfun c : s\nfun h : e -> s\n");
  const TermUniverse u = enumerate_closed_terms(sig, 3);
  EXPECT_EQ(u.empty_sorts, (std::vector<std::string>{"e"}));
  EXPECT_TRUE(u.of("e").empty());
  EXPECT_TRUE(u.saturated);
}

TEST(Universe, MatchesNaiveRecursion) {
  const Signature sig = parse_signature(R"(
sort s
sort t
fun a : s
fun b : t
fun g : s * t -> s
fun h : s -> t
fun k : t -> t
)");
  for (std::size_t d = 1; d <= 4; ++d) {
    const TermUniverse u = enumerate_closed_terms(sig, d);
    for (const std::string sort : {"s", "t"}) {
      const auto got = names(u.of(sort));
      EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), naive_terms(sig, sort, d)) << sort << d;
      EXPECT_EQ(got.size(), std::set<std::string>(got.begin(), got.end()).size());
      for (std::size_t i = 1; i < u.of(sort).size(); ++i) {
        EXPECT_LE(u.of(sort)[i - 1].depth(), u.of(sort)[i].depth());
      }
    }
    EXPECT_FALSE(u.saturated);
  }
}

TEST(Universe, ScaleLimit) {
  const Signature sig = parse_signature("sort s\nfun c : s\nfun m : s * s -> s\n");
  EXPECT_THROW(enumerate_closed_terms(sig, 6, 1000), ScaleExceeded);
}

TEST(TheoryFile, Directives) {
  const Theory th = parse_theory(R"(
# comment
sort s
fun c : s
fun f : s -> s
rel P : s
rel R
axiom forall x:s. P(x) -> P(f(x))
formula R | 0
depth 2
interp P(c) = {1}
interp R = top   # trailing comment
)");
  EXPECT_EQ(th.signature.sorts.size(), 1u);
  EXPECT_EQ(th.signature.functions.size(), 2u);
  EXPECT_EQ(th.signature.relations.size(), 2u);
  EXPECT_EQ(th.signature.axioms.size(), 1u);
  EXPECT_EQ(th.formulas.size(), 1u);
  EXPECT_EQ(th.depth, 2u);
  ASSERT_EQ(th.assignments.size(), 2u);
  EXPECT_EQ(to_string(th.assignments[0].atom), "P(c)");
  EXPECT_EQ(th.assignments[0].object, "{1}");
  EXPECT_EQ(th.assignments[1].line, 12u);
}

TEST(TheoryFile, ErrorsCarryLines) {
  try {
    parse_theory("sort s\nfun c : s\nrel P : s\ninterp P(c & = x\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(parse_theory("sort s\nfun c : q\n"), InputError);
  EXPECT_THROW(parse_theory("sort s\nrel P : s\nfun c : s\naxiom P(x)\n"), InputError);
  EXPECT_THROW(parse_theory("sort s\nrel P : s\nrel P : s\n"), InputError);
  EXPECT_THROW(parse_theory("sort s\nrel R\ninterp R = a\ninterp R = b\n"), InputError);
  EXPECT_THROW(parse_theory("depth zero\n"), SyntaxError);
  EXPECT_THROW(parse_theory("bogus\n"), SyntaxError);
}

}  // namespace
}  // namespace ldcat
