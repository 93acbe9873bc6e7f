// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ldcat/category.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "ldcat/error.hpp"

namespace ldcat {

std::vector<ObjId> FinCategory::objects() const {
  std::vector<ObjId> out(object_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = ObjId{i};
  return out;
}

std::vector<ArrId> FinCategory::arrows() const {
  std::vector<ArrId> out(arrow_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = ArrId{i};
  return out;
}

std::optional<ObjId> FinCategory::find_object(std::string_view name) const {
  auto it = std::find(object_names_.begin(), object_names_.end(), name);
  if (it == object_names_.end()) return std::nullopt;
  return ObjId{static_cast<std::uint32_t>(it - object_names_.begin())};
}

std::optional<ArrId> FinCategory::find_arrow(std::string_view name) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.name == name; });
  if (it == arrows_.end()) return std::nullopt;
  return ArrId{static_cast<std::uint32_t>(it - arrows_.begin())};
}

std::optional<ArrId> FinCategory::composite(ArrId g, ArrId f) const {
  std::int32_t cell = table_[g.index * arrow_count() + f.index];
  if (cell == kUndefined) return std::nullopt;
  return ArrId{static_cast<std::uint32_t>(cell)};
}

ArrId FinCategory::compose(ArrId g, ArrId f) const {
  if (dom(g) != cod(f)) {
    throw NotComposable("cannot compose " + name(g) + " . " + name(f) + ": dom(" + name(g) + ") = " +
                        name(dom(g)) + " but cod(" + name(f) + ") = " + name(cod(f)));
  }
  auto h = composite(g, f);
  if (!h) throw MalformedInput("composition table has no entry for " + name(g) + " . " + name(f));
  return *h;
}

FinCategory FinCategory::with_composite(ArrId g, ArrId f, std::optional<ArrId> h) const {
  FinCategory out = *this;
  out.table_[g.index * arrow_count() + f.index] = h ? static_cast<std::int32_t>(h->index) : kUndefined;
  return out;
}

FinCategory FinCategory::with_identity(ObjId o, ArrId a) const {
  FinCategory out = *this;
  out.identities_[o.index] = a;
  return out;
}

void FinCategory::index_homs() {
  const std::size_t n = object_count();
  hom_.assign(n * n, {});
  for (std::uint32_t i = 0; i < arrows_.size(); ++i) {
    hom_[arrows_[i].dom.index * n + arrows_[i].cod.index].push_back(ArrId{i});
  }
}

ObjId CategoryBuilder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identities_.emplace_back();
  return ObjId{static_cast<std::uint32_t>(objects_.size() - 1)};
}

ArrId CategoryBuilder::add_arrow(std::string name, ObjId dom, ObjId cod) {
  arrows_.push_back({std::move(name), dom, cod});
  return ArrId{static_cast<std::uint32_t>(arrows_.size() - 1)};
}

void CategoryBuilder::set_identity(ObjId o, ArrId a) {
  if (o.index >= identities_.size()) throw MalformedInput("identity for unknown object index " + std::to_string(o.index));
  identities_[o.index] = a;
}

ArrId CategoryBuilder::add_auto_identity(ObjId o) {
  if (o.index >= objects_.size()) throw MalformedInput("identity for unknown object index " + std::to_string(o.index));
  ArrId id = add_arrow("id_" + objects_[o.index], o, o);
  identities_[o.index] = id;
  auto_identities_.push_back(o);
  return id;
}

void CategoryBuilder::set_composite(ArrId g, ArrId f, ArrId h) { composites_.push_back({g, f, h}); }

bool CategoryBuilder::has_object(std::string_view name) const { return find_object(name).has_value(); }

std::optional<ObjId> CategoryBuilder::find_object(std::string_view name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return ObjId{static_cast<std::uint32_t>(it - objects_.begin())};
}

std::optional<ArrId> CategoryBuilder::find_arrow(std::string_view name) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const auto& a) { return a.name == name; });
  if (it == arrows_.end()) return std::nullopt;
  return ArrId{static_cast<std::uint32_t>(it - arrows_.begin())};
}

FinCategory CategoryBuilder::build() const {
  FinCategory c;
  const std::size_t n = objects_.size();
  const std::size_t m = arrows_.size();

  std::unordered_map<std::string, int> seen;
  for (const auto& name : objects_) {
    if (seen[name]++ > 0) throw MalformedInput("duplicate object name '" + name + "'");
  }
  seen.clear();
  for (const auto& a : arrows_) {
    if (seen[a.name]++ > 0) throw MalformedInput("duplicate arrow name '" + a.name + "'");
    if (a.dom.index >= n || a.cod.index >= n) throw MalformedInput("arrow '" + a.name + "' has a dangling endpoint");
  }

  c.object_names_ = objects_;
  c.arrows_ = arrows_;
  c.identities_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!identities_[i]) throw MalformedInput("object '" + objects_[i] + "' has no identity declaration");
    if (identities_[i]->index >= m) throw MalformedInput("identity of '" + objects_[i] + "' is a dangling arrow");
    c.identities_[i] = *identities_[i];
  }

  c.table_.assign(m * m, FinCategory::kUndefined);
  for (const auto& [g, f, h] : composites_) {
    if (g.index >= m || f.index >= m || h.index >= m) throw MalformedInput("composite refers to a dangling arrow");
    auto& cell = c.table_[g.index * m + f.index];
    if (cell != FinCategory::kUndefined && cell != static_cast<std::int32_t>(h.index)) {
      throw MalformedInput("conflicting composites declared for " + arrows_[g.index].name + " . " +
                           arrows_[f.index].name);
    }
    cell = static_cast<std::int32_t>(h.index);
  }

  for (ObjId o : auto_identities_) {
    const std::int32_t id = static_cast<std::int32_t>(c.identities_[o.index].index);
    for (std::uint32_t a = 0; a < m; ++a) {
      if (arrows_[a].cod == o) {
        auto& cell = c.table_[static_cast<std::size_t>(id) * m + a];
        if (cell == FinCategory::kUndefined) cell = static_cast<std::int32_t>(a);
      }
      if (arrows_[a].dom == o) {
        auto& cell = c.table_[a * m + static_cast<std::size_t>(id)];
        if (cell == FinCategory::kUndefined) cell = static_cast<std::int32_t>(a);
      }
    }
  }

  c.index_homs();
  return c;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::IdentityShape: return "identity-shape";
    case ViolationKind::MissingComposite: return "missing-composite";
    case ViolationKind::SpuriousComposite: return "spurious-composite";
    case ViolationKind::CompositeShape: return "composite-shape";
    case ViolationKind::IdentityLaw: return "identity-law";
    case ViolationKind::Associativity: return "associativity";
  }
  return "unknown";
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::vector<ArrId> witnesses, std::string message) {
    report.violations.push_back({kind, std::move(witnesses), std::move(message)});
  };

  for (ObjId o : c.objects()) {
    ArrId id = c.identity(o);
    if (c.dom(id) != o || c.cod(id) != o) {
      add(ViolationKind::IdentityShape, {id}, "identity of " + c.name(o) + " is " + c.name(id) + " : " +
                                                  c.name(c.dom(id)) + " -> " + c.name(c.cod(id)));
    }
  }

  // A cell is usable downstream only when it is present and well-shaped.
  const auto arrows = c.arrows();
  std::vector<char> usable(arrows.size() * arrows.size(), 0);
  for (ArrId g : arrows) {
    for (ArrId f : arrows) {
      auto h = c.composite(g, f);
      const bool composable = c.dom(g) == c.cod(f);
      if (!composable) {
        if (h) {
          add(ViolationKind::SpuriousComposite, {g, f, *h},
              "entry " + c.name(g) + " . " + c.name(f) + " = " + c.name(*h) + " on a non-composable pair");
        }
        continue;
      }
      if (!h) {
        add(ViolationKind::MissingComposite, {g, f}, "no entry for " + c.name(g) + " . " + c.name(f));
        continue;
      }
      if (c.dom(*h) != c.dom(f) || c.cod(*h) != c.cod(g)) {
        add(ViolationKind::CompositeShape, {g, f, *h},
            c.name(g) + " . " + c.name(f) + " = " + c.name(*h) + " has endpoints " + c.name(c.dom(*h)) + " -> " +
                c.name(c.cod(*h)) + ", expected " + c.name(c.dom(f)) + " -> " + c.name(c.cod(g)));
        continue;
      }
      usable[g.index * arrows.size() + f.index] = 1;
    }
  }
  auto cell = [&](ArrId g, ArrId f) -> std::optional<ArrId> {
    if (!usable[g.index * arrows.size() + f.index]) return std::nullopt;
    return c.composite(g, f);
  };

  for (ArrId f : arrows) {
    ArrId left = c.identity(c.cod(f));
    ArrId right = c.identity(c.dom(f));
    if (auto h = cell(left, f); h && *h != f) {
      add(ViolationKind::IdentityLaw, {left, f}, c.name(left) + " . " + c.name(f) + " = " + c.name(*h));
    }
    if (auto h = cell(f, right); h && *h != f) {
      add(ViolationKind::IdentityLaw, {f, right}, c.name(f) + " . " + c.name(right) + " = " + c.name(*h));
    }
  }

  for (ArrId f : arrows) {
    for (ArrId g : arrows) {
      auto gf = cell(g, f);
      if (!gf) continue;
      for (ArrId h : arrows) {
        auto hg = cell(h, g);
        if (!hg) continue;
        auto lhs = cell(h, *gf);
        auto rhs = cell(*hg, f);
        if (lhs && rhs && *lhs != *rhs) {
          add(ViolationKind::Associativity, {h, g, f},
              "(" + c.name(h) + " . " + c.name(g) + ") . " + c.name(f) + " = " + c.name(*rhs) + " but " +
                  c.name(h) + " . (" + c.name(g) + " . " + c.name(f) + ") = " + c.name(*lhs));
        }
      }
    }
  }
  return report;
}

ArrId compose(const FinCategory& c, ArrId g, ArrId f) { return c.compose(g, f); }

std::span<const ArrId> hom(const FinCategory& c, ObjId a, ObjId b) { return c.hom(a, b); }

bool mutually_inverse(const FinCategory& c, ArrId f, ArrId g) {
  if (c.dom(f) != c.cod(g) || c.dom(g) != c.cod(f)) {
    throw ShapeMismatch(c.name(f) + " and " + c.name(g) + " do not have opposite endpoints");
  }
  return c.compose(g, f) == c.identity(c.dom(f)) && c.compose(f, g) == c.identity(c.dom(g));
}

std::optional<ArrId> find_inverse(const FinCategory& c, ArrId f) {
  for (ArrId g : c.hom(c.cod(f), c.dom(f))) {
    if (mutually_inverse(c, f, g)) return g;
  }
  return std::nullopt;
}

bool isomorphic(const FinCategory& c, ObjId a, ObjId b) {
  for (ArrId f : c.hom(a, b)) {
    if (find_inverse(c, f)) return true;
  }
  return false;
}

FinCategory full_subcategory(const FinCategory& c, std::span<const ObjId> keep) {
  CategoryBuilder b;
  std::vector<std::optional<ObjId>> obj_map(c.object_count());
  for (ObjId o : keep) obj_map[o.index] = b.add_object(c.name(o));

  std::vector<std::optional<ArrId>> arr_map(c.arrow_count());
  for (ArrId a : c.arrows()) {
    if (obj_map[c.dom(a).index] && obj_map[c.cod(a).index]) {
      arr_map[a.index] = b.add_arrow(c.name(a), *obj_map[c.dom(a).index], *obj_map[c.cod(a).index]);
    }
  }
  for (ObjId o : keep) {
    auto id = arr_map[c.identity(o).index];
    if (!id) throw MalformedInput("identity of '" + c.name(o) + "' does not survive restriction");
    b.set_identity(*obj_map[o.index], *id);
  }
  for (ArrId g : c.arrows()) {
    if (!arr_map[g.index]) continue;
    for (ArrId f : c.arrows()) {
      if (!arr_map[f.index]) continue;
      auto h = c.composite(g, f);
      if (h && arr_map[h->index]) b.set_composite(*arr_map[g.index], *arr_map[f.index], *arr_map[h->index]);
    }
  }
  return b.build();
}

}  // namespace ldcat
