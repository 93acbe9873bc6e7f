// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ldcat/structure.hpp"

#include "ldcat/error.hpp"

namespace ldcat {
namespace {

// Best failing candidate seen by a search, for the NoSuchStructure message.
struct NearMiss {
  std::size_t passed = 0;
  std::string text;
  bool any = false;

  void offer(std::size_t objects_passed, std::string description) {
    if (!any || objects_passed > passed) {
      any = true;
      passed = objects_passed;
      text = std::move(description);
    }
  }
};

std::string mediator_note(std::size_t count) {
  return count == 0 ? "no mediator" : std::to_string(count) + " mediators";
}

}  // namespace

ProductWitness find_product(const FinCategory& c, ObjId a, ObjId b) {
  NearMiss miss;
  for (ObjId apex : c.objects()) {
    for (ArrId p1 : c.hom(apex, a)) {
      for (ArrId p2 : c.hom(apex, b)) {
        std::size_t passed = 0;
        std::string failure;
        for (ObjId w : c.objects()) {
          for (ArrId f : c.hom(w, a)) {
            for (ArrId g : c.hom(w, b)) {
              std::size_t count = 0;
              for (ArrId m : c.hom(w, apex)) {
                if (c.compose(p1, m) == f && c.compose(p2, m) == g) ++count;
              }
              if (count != 1) {
                failure = "apex " + c.name(apex) + " (" + c.name(p1) + ", " + c.name(p2) + ") has " +
                          mediator_note(count) + " for (" + c.name(f) + ", " + c.name(g) + ") from " + c.name(w);
                break;
              }
            }
            if (!failure.empty()) break;
          }
          if (!failure.empty()) break;
          ++passed;
        }
        if (failure.empty()) return {a, b, apex, p1, p2};
        miss.offer(passed, failure);
      }
    }
  }
  throw NoSuchStructure("no product of " + c.name(a) + " and " + c.name(b) +
                        (miss.any ? "; closest: " + miss.text : "; no object has arrows to both"));
}

CoproductWitness find_coproduct(const FinCategory& c, ObjId a, ObjId b) {
  NearMiss miss;
  for (ObjId apex : c.objects()) {
    for (ArrId i1 : c.hom(a, apex)) {
      for (ArrId i2 : c.hom(b, apex)) {
        std::size_t passed = 0;
        std::string failure;
        for (ObjId w : c.objects()) {
          for (ArrId f : c.hom(a, w)) {
            for (ArrId g : c.hom(b, w)) {
              std::size_t count = 0;
              for (ArrId m : c.hom(apex, w)) {
                if (c.compose(m, i1) == f && c.compose(m, i2) == g) ++count;
              }
              if (count != 1) {
                failure = "apex " + c.name(apex) + " (" + c.name(i1) + ", " + c.name(i2) + ") has " +
                          mediator_note(count) + " for [" + c.name(f) + ", " + c.name(g) + "] into " + c.name(w);
                break;
              }
            }
            if (!failure.empty()) break;
          }
          if (!failure.empty()) break;
          ++passed;
        }
        if (failure.empty()) return {a, b, apex, i1, i2};
        miss.offer(passed, failure);
      }
    }
  }
  throw NoSuchStructure("no coproduct of " + c.name(a) + " and " + c.name(b) +
                        (miss.any ? "; closest: " + miss.text : "; no object receives arrows from both"));
}

TerminalWitness find_terminal(const FinCategory& c) {
  NearMiss miss;
  for (ObjId t : c.objects()) {
    std::size_t passed = 0;
    for (ObjId w : c.objects()) {
      if (c.hom(w, t).size() != 1) {
        miss.offer(passed, c.name(t) + " has " + std::to_string(c.hom(w, t).size()) + " arrows from " + c.name(w));
        break;
      }
      ++passed;
    }
    if (passed == c.object_count()) return {t};
  }
  throw NoSuchStructure("no terminal object" + (miss.any ? "; closest: " + miss.text : std::string()));
}

InitialWitness find_initial(const FinCategory& c) {
  NearMiss miss;
  for (ObjId i : c.objects()) {
    std::size_t passed = 0;
    for (ObjId w : c.objects()) {
      if (c.hom(i, w).size() != 1) {
        miss.offer(passed, c.name(i) + " has " + std::to_string(c.hom(i, w).size()) + " arrows to " + c.name(w));
        break;
      }
      ++passed;
    }
    if (passed == c.object_count()) return {i};
  }
  throw NoSuchStructure("no initial object" + (miss.any ? "; closest: " + miss.text : std::string()));
}

ExponentialWitness find_exponential(const StructureTable& st, ObjId base, ObjId target) {
  const FinCategory& c = st.category();
  for (ObjId w : c.objects()) {
    if (!st.has_product(w, base)) {
      throw NoSuchStructure("no exponential " + c.name(target) + "^" + c.name(base) + ": product " + c.name(w) +
                            " x " + c.name(base) + " is missing");
    }
  }
  const ArrId id_base = c.identity(base);
  NearMiss miss;
  for (ObjId apex : c.objects()) {
    const ObjId apex_times_base = st.product(apex, base).apex;
    for (ArrId eval : c.hom(apex_times_base, target)) {
      std::size_t passed = 0;
      std::string failure;
      for (ObjId w : c.objects()) {
        const ObjId w_times_base = st.product(w, base).apex;
        for (ArrId f : c.hom(w_times_base, target)) {
          std::size_t count = 0;
          for (ArrId g : c.hom(w, apex)) {
            if (c.compose(eval, arrow_product(st, g, id_base)) == f) ++count;
          }
          if (count != 1) {
            failure = "apex " + c.name(apex) + " with eval " + c.name(eval) + " has " + mediator_note(count) +
                      " transposing " + c.name(f) + " from " + c.name(w);
            break;
          }
        }
        if (!failure.empty()) break;
        ++passed;
      }
      if (failure.empty()) return {base, target, apex, eval};
      miss.offer(passed, failure);
    }
  }
  throw NoSuchStructure("no exponential " + c.name(target) + "^" + c.name(base) +
                        (miss.any ? "; closest: " + miss.text : "; no candidate evaluation arrow"));
}

StructureTable::StructureTable(FinCategory c) : category_(std::move(c)) {
  const std::size_t n = category_.object_count();
  products_.resize(n * n);
  coproducts_.resize(n * n);
  exponentials_.resize(n * n);
  product_errors_.resize(n * n);
  coproduct_errors_.resize(n * n);
  exponential_errors_.resize(n * n);
}

StructureTable StructureTable::discover(FinCategory c) {
  StructureTable st(std::move(c));
  const FinCategory& cat = st.category_;
  try {
    st.terminal_ = find_terminal(cat);
  } catch (const NoSuchStructure& e) {
    st.terminal_error_ = e.what();
  }
  try {
    st.initial_ = find_initial(cat);
  } catch (const NoSuchStructure& e) {
    st.initial_error_ = e.what();
  }
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      try {
        st.products_[st.key(a, b)] = find_product(cat, a, b);
      } catch (const NoSuchStructure& e) {
        st.product_errors_[st.key(a, b)] = e.what();
      }
      try {
        st.coproducts_[st.key(a, b)] = find_coproduct(cat, a, b);
      } catch (const NoSuchStructure& e) {
        st.coproduct_errors_[st.key(a, b)] = e.what();
      }
    }
  }
  for (ObjId base : cat.objects()) {
    for (ObjId target : cat.objects()) {
      try {
        st.exponentials_[st.key(base, target)] = find_exponential(st, base, target);
      } catch (const NoSuchStructure& e) {
        st.exponential_errors_[st.key(base, target)] = e.what();
      }
    }
  }
  return st;
}

const TerminalWitness& StructureTable::terminal() const {
  if (!terminal_) throw NoSuchStructure(terminal_error_);
  return *terminal_;
}

const InitialWitness& StructureTable::initial() const {
  if (!initial_) throw NoSuchStructure(initial_error_);
  return *initial_;
}

const ProductWitness& StructureTable::product(ObjId a, ObjId b) const {
  const auto& p = products_[key(a, b)];
  if (!p) throw NoSuchStructure(product_errors_[key(a, b)]);
  return *p;
}

const CoproductWitness& StructureTable::coproduct(ObjId a, ObjId b) const {
  const auto& p = coproducts_[key(a, b)];
  if (!p) throw NoSuchStructure(coproduct_errors_[key(a, b)]);
  return *p;
}

const ExponentialWitness& StructureTable::exponential(ObjId base, ObjId target) const {
  const auto& e = exponentials_[key(base, target)];
  if (!e) throw NoSuchStructure(exponential_errors_[key(base, target)]);
  return *e;
}

std::size_t count_pair_mediators(const StructureTable& st, ArrId f, ArrId g) {
  const FinCategory& c = st.category();
  if (c.dom(f) != c.dom(g)) throw ShapeMismatch("pair of " + c.name(f) + " and " + c.name(g) + " with different domains");
  const ProductWitness& p = st.product(c.cod(f), c.cod(g));
  std::size_t count = 0;
  for (ArrId m : c.hom(c.dom(f), p.apex)) {
    if (c.compose(p.proj1, m) == f && c.compose(p.proj2, m) == g) ++count;
  }
  return count;
}

ArrId pair(const StructureTable& st, ArrId f, ArrId g) {
  const FinCategory& c = st.category();
  if (c.dom(f) != c.dom(g)) throw ShapeMismatch("pair of " + c.name(f) + " and " + c.name(g) + " with different domains");
  const ProductWitness& p = st.product(c.cod(f), c.cod(g));
  std::optional<ArrId> found;
  for (ArrId m : c.hom(c.dom(f), p.apex)) {
    if (c.compose(p.proj1, m) == f && c.compose(p.proj2, m) == g) {
      if (found) throw UniversalityBroken("several mediators for <" + c.name(f) + ", " + c.name(g) + ">");
      found = m;
    }
  }
  if (!found) throw UniversalityBroken("no mediator for <" + c.name(f) + ", " + c.name(g) + ">");
  return *found;
}

ArrId copair(const StructureTable& st, ArrId f, ArrId g) {
  const FinCategory& c = st.category();
  if (c.cod(f) != c.cod(g)) {
    throw ShapeMismatch("copair of " + c.name(f) + " and " + c.name(g) + " with different codomains");
  }
  const CoproductWitness& s = st.coproduct(c.dom(f), c.dom(g));
  std::optional<ArrId> found;
  for (ArrId m : c.hom(s.apex, c.cod(f))) {
    if (c.compose(m, s.inj1) == f && c.compose(m, s.inj2) == g) {
      if (found) throw UniversalityBroken("several mediators for [" + c.name(f) + ", " + c.name(g) + "]");
      found = m;
    }
  }
  if (!found) throw UniversalityBroken("no mediator for [" + c.name(f) + ", " + c.name(g) + "]");
  return *found;
}

ArrId arrow_product(const StructureTable& st, ArrId f, ArrId g) {
  const FinCategory& c = st.category();
  const ProductWitness& src = st.product(c.dom(f), c.dom(g));
  return pair(st, c.compose(f, src.proj1), c.compose(g, src.proj2));
}

ArrId swap(const StructureTable& st, ObjId a, ObjId b) {
  const ProductWitness& p = st.product(a, b);
  return pair(st, p.proj2, p.proj1);
}

ArrId transpose(const StructureTable& st, ObjId w, ObjId a, ArrId f) {
  const FinCategory& c = st.category();
  const ObjId w_times_a = st.product(w, a).apex;
  if (c.dom(f) != w_times_a) {
    throw ShapeMismatch("transpose of " + c.name(f) + ": domain is " + c.name(c.dom(f)) + ", expected " +
                        c.name(w) + " x " + c.name(a) + " = " + c.name(w_times_a));
  }
  const ExponentialWitness& e = st.exponential(a, c.cod(f));
  const ArrId id_a = c.identity(a);
  std::optional<ArrId> found;
  for (ArrId g : c.hom(w, e.apex)) {
    if (c.compose(e.eval, arrow_product(st, g, id_a)) == f) {
      if (found) throw UniversalityBroken("several transposes of " + c.name(f));
      found = g;
    }
  }
  if (!found) throw UniversalityBroken("no transpose of " + c.name(f));
  return *found;
}

ArrId theta(const StructureTable& st, ObjId a, ObjId target, ArrId g) {
  const FinCategory& c = st.category();
  const ExponentialWitness& e = st.exponential(a, target);
  if (c.cod(g) != e.apex) {
    throw ShapeMismatch("theta of " + c.name(g) + ": codomain is " + c.name(c.cod(g)) + ", expected " +
                        c.name(e.apex));
  }
  return c.compose(e.eval, arrow_product(st, g, c.identity(a)));
}

}  // namespace ldcat
