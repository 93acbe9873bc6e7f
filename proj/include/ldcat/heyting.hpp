// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldcat/category.hpp"
#include "ldcat/logic.hpp"
#include "ldcat/theory.hpp"

namespace ldcat {

/// A finite Heyting algebra with its operation tables. Elements are dense
/// indices; the derived thin category uses the same indices for objects.
class HeytingModel {
 public:
  using Element = std::uint32_t;

  /// Computes meet, join and implication by brute force over `leq` and
  /// throws MalformedInput unless the order is a Heyting algebra.
  static HeytingModel from_order(std::string id, std::vector<std::string> names, std::vector<char> leq);

  const std::string& id() const { return id_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(Element e) const { return names_[e]; }
  std::optional<Element> element(std::string_view name) const;

  bool leq(Element a, Element b) const { return leq_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element impl(Element a, Element b) const { return impl_[a * size() + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// Thin category: one arrow a<=b per related pair, identities id_a.
  FinCategory to_category() const;

 private:
  std::string id_;
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<Element> meet_, join_, impl_;
  Element bottom_ = 0, top_ = 0;
};

/// The chain 0 < 1 < ... < n-1, 1 <= n <= 32.
HeytingModel gen_chain(std::size_t n);
/// Subsets of {1..k} under inclusion, k <= 4.
HeytingModel gen_powerset(std::size_t k);
/// The 2x2 lattice bot < a, b < top.
HeytingModel gen_diamond();

/// Direct lattice evaluation: 0 bottom, 1 top, & meet, | join, -> impl,
/// forall / exists finite meet / join over the universe. Atoms are resolved
/// through the theory's assignments by element name.
HeytingModel::Element oracle_interpret(const HeytingModel& model, const Theory& theory, const TermUniverse& universe,
                                       const Formula& f);

}  // namespace ldcat
