// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bitset>
#include <string>
#include <string_view>

#include "ldcat/category.hpp"
#include "ldcat/category_io.hpp"
#include "ldcat/heyting.hpp"

namespace ldcat::testing {

// The two-element chain with named arrows.
inline FinCategory h2() {
  return parse_category(R"(
object bot
object top
arrow u : bot -> top
id bot = auto
id top = auto
compose u . id_bot = u
compose id_top . u = u
)");
}

inline FinCategory b4() { return gen_powerset(2).to_category(); }

// The poset bot < a, bot < b: no top, so no product-closed structure.
inline FinCategory vee() {
  return parse_category(R"(
object bot
object a
object b
arrow ia : bot -> a
arrow ib : bot -> b
id bot = auto
id a = auto
id b = auto
)");
}

inline ObjId obj(const FinCategory& c, std::string_view name) { return *c.find_object(name); }
inline ArrId arr(const FinCategory& c, std::string_view name) { return *c.find_arrow(name); }

// "{1,3}" -> 0b101, read off the printed name alone.
inline unsigned subset_mask(std::string_view name) {
  unsigned m = 0;
  for (char ch : name) {
    if (ch >= '1' && ch <= '9') m |= 1u << (ch - '1');
  }
  return m;
}

inline std::string subset_name(unsigned mask) {
  std::string out = "{";
  for (unsigned i = 0; i < 8; ++i) {
    if (mask & (1u << i)) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
  }
  return out + "}";
}

}  // namespace ldcat::testing
