// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldcat {

struct ObjId {
  std::uint32_t index = 0;
  friend auto operator<=>(ObjId, ObjId) = default;
};

struct ArrId {
  std::uint32_t index = 0;
  friend auto operator<=>(ArrId, ArrId) = default;
};

class CategoryBuilder;

/// A finite category given by an explicit composition table.
///
/// Objects and arrows are dense indices. The composition table is a dense
/// |Arr| x |Arr| grid; cell (g, f) holds g . f, or nothing. A FinCategory
/// only guarantees that every stored index is in range. Whether it is a
/// category is answered by validate_category(); downstream code assumes a
/// validated instance and does not re-check the laws.
class FinCategory {
 public:
  FinCategory() = default;

  std::size_t object_count() const { return object_names_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  std::vector<ObjId> objects() const;
  std::vector<ArrId> arrows() const;

  const std::string& name(ObjId o) const { return object_names_[o.index]; }
  const std::string& name(ArrId a) const { return arrows_[a.index].name; }
  ObjId dom(ArrId a) const { return arrows_[a.index].dom; }
  ObjId cod(ArrId a) const { return arrows_[a.index].cod; }
  ArrId identity(ObjId o) const { return identities_[o.index]; }

  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<ArrId> find_arrow(std::string_view name) const;

  /// Raw table cell, no checks beyond range.
  std::optional<ArrId> composite(ArrId g, ArrId f) const;

  /// g . f. Throws NotComposable when dom(g) != cod(f) and MalformedInput
  /// when the table has no entry for a composable pair.
  ArrId compose(ArrId g, ArrId f) const;

  /// Arrows a -> b in ascending index order.
  std::span<const ArrId> hom(ObjId a, ObjId b) const { return hom_[a.index * object_count() + b.index]; }

  /// Copy with one table cell replaced (or cleared).
  FinCategory with_composite(ArrId g, ArrId f, std::optional<ArrId> h) const;

  /// Copy with one identity entry replaced.
  FinCategory with_identity(ObjId o, ArrId a) const;

  friend bool operator==(const FinCategory&, const FinCategory&) = default;

 private:
  friend class CategoryBuilder;

  struct Arrow {
    std::string name;
    ObjId dom;
    ObjId cod;
    friend bool operator==(const Arrow&, const Arrow&) = default;
  };

  static constexpr std::int32_t kUndefined = -1;

  void index_homs();

  std::vector<std::string> object_names_;
  std::vector<Arrow> arrows_;
  std::vector<ArrId> identities_;
  std::vector<std::int32_t> table_;
  std::vector<std::vector<ArrId>> hom_;
};

/// Incremental construction by name; build() resolves everything at once.
class CategoryBuilder {
 public:
  ObjId add_object(std::string name);
  ArrId add_arrow(std::string name, ObjId dom, ObjId cod);
  void set_identity(ObjId o, ArrId a);
  /// Declares an identity arrow named "id_<object>" together with its
  /// identity-law composites. Explicit entries set through set_composite
  /// take precedence over the generated ones.
  ArrId add_auto_identity(ObjId o);
  void set_composite(ArrId g, ArrId f, ArrId h);

  bool has_object(std::string_view name) const;
  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<ArrId> find_arrow(std::string_view name) const;
  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  /// Throws MalformedInput on duplicate names, dangling indices, missing
  /// identity declarations or conflicting composite declarations.
  FinCategory build() const;

 private:
  struct Composite {
    ArrId g, f, h;
  };

  std::vector<std::string> objects_;
  std::vector<FinCategory::Arrow> arrows_;
  std::vector<std::optional<ArrId>> identities_;
  std::vector<ObjId> auto_identities_;
  std::vector<Composite> composites_;
};

enum class ViolationKind {
  IdentityShape,      // identity(A) is not an endomorphism of A
  MissingComposite,   // composable pair without a table entry
  SpuriousComposite,  // entry on a non-composable pair
  CompositeShape,     // dom/cod of g . f do not match dom f / cod g
  IdentityLaw,
  Associativity,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<ArrId> witnesses;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Lists every violated category law, with the witnessing arrows.
ValidationReport validate_category(const FinCategory& c);

ArrId compose(const FinCategory& c, ArrId g, ArrId f);
std::span<const ArrId> hom(const FinCategory& c, ObjId a, ObjId b);

/// True iff g . f = id_dom(f) and f . g = id_dom(g). Throws ShapeMismatch
/// unless f: A -> B and g: B -> A.
bool mutually_inverse(const FinCategory& c, ArrId f, ArrId g);

/// Some g with mutually_inverse(f, g), searched in hom(cod f, dom f).
std::optional<ArrId> find_inverse(const FinCategory& c, ArrId f);

bool isomorphic(const FinCategory& c, ObjId a, ObjId b);

/// The full subcategory on `keep`, with names preserved.
FinCategory full_subcategory(const FinCategory& c, std::span<const ObjId> keep);

}  // namespace ldcat
