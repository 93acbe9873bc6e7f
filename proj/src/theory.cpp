// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ldcat/theory.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ldcat/category_io.hpp"
#include "ldcat/error.hpp"

namespace ldcat {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }) && s != "forall" && s != "exists" && s != "0" && s != "1";
}

// Re-bases a SyntaxError raised while parsing a formula fragment that starts
// at column `offset` of line `line`.
template <typename F>
auto with_position(std::size_t line, std::size_t offset, F&& parse) {
  try {
    return parse();
  } catch (const SyntaxError& e) {
    std::string what = e.what();
    if (auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw SyntaxError(line, e.column() + offset, what);
  } catch (const SortError& e) {
    throw SortError("line " + std::to_string(line) + ": " + e.what());
  } catch (const UnknownSymbol& e) {
    throw UnknownSymbol("line " + std::to_string(line) + ": " + e.what());
  }
}

}  // namespace

Theory parse_theory(std::string_view text) {
  Theory th;
  Signature& sig = th.signature;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;

  auto check_sort = [&](const std::string& s) {
    if (!sig.has_sort(s)) throw UnknownSymbol("line " + std::to_string(lineno) + ": unknown sort '" + s + "'");
  };
  auto check_fresh = [&](const std::string& name) {
    if (!valid_name(name)) throw SyntaxError(lineno, 1, "invalid symbol name '" + name + "'");
    if (sig.function(name) || sig.relation(name)) {
      throw MalformedInput("line " + std::to_string(lineno) + ": duplicate symbol '" + name + "'");
    }
  };
  auto sort_list = [&](const std::string& s) {
    std::vector<std::string> sorts;
    if (s.empty()) return sorts;
    for (auto& part : split(s, '*')) {
      check_sort(part);
      sorts.push_back(part);
    }
    return sorts;
  };

  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto space = line.find_first_of(" \t");
    const std::string keyword = line.substr(0, space);
    const std::string rest = space == std::string::npos ? std::string() : trim(line.substr(space));
    const std::size_t rest_col = space == std::string::npos ? line.size() : raw.find(rest, raw.find(keyword) + keyword.size());

    if (keyword == "sort") {
      if (!valid_name(rest)) throw SyntaxError(lineno, 1, "expected `sort <name>`");
      if (sig.has_sort(rest)) throw MalformedInput("line " + std::to_string(lineno) + ": duplicate sort '" + rest + "'");
      sig.sorts.push_back(rest);
    } else if (keyword == "fun") {
      const auto colon = rest.find(':');
      if (colon == std::string::npos) throw SyntaxError(lineno, 1, "expected `fun <name> : <sorts> -> <sort>`");
      const std::string name = trim(rest.substr(0, colon));
      check_fresh(name);
      const std::string type = trim(rest.substr(colon + 1));
      FunctionSymbol fn{name, {}, {}};
      if (auto arrow = type.find("->"); arrow != std::string::npos) {
        fn.arg_sorts = sort_list(trim(type.substr(0, arrow)));
        fn.result_sort = trim(type.substr(arrow + 2));
      } else {
        fn.result_sort = type;
      }
      check_sort(fn.result_sort);
      sig.functions.push_back(std::move(fn));
    } else if (keyword == "rel") {
      const auto colon = rest.find(':');
      const std::string name = trim(rest.substr(0, colon));
      check_fresh(name);
      RelationSymbol rel{name, {}};
      if (colon != std::string::npos) rel.arg_sorts = sort_list(trim(rest.substr(colon + 1)));
      sig.relations.push_back(std::move(rel));
    } else if (keyword == "axiom" || keyword == "formula") {
      Formula f = with_position(lineno, rest_col, [&] { return parse_formula(rest, sig); });
      if (!is_closed(f)) throw SortError("line " + std::to_string(lineno) + ": " + keyword + " must be closed");
      (keyword == "axiom" ? sig.axioms : th.formulas).push_back(std::move(f));
    } else if (keyword == "depth") {
      std::size_t value = 0;
      std::istringstream num(rest);
      if (!(num >> value) || !num.eof() || value < 1) throw SyntaxError(lineno, 1, "expected `depth <n>` with n >= 1");
      th.depth = value;
    } else if (keyword == "interp") {
      const auto eq = rest.rfind('=');
      if (eq == std::string::npos) throw SyntaxError(lineno, 1, "expected `interp <atom> = <object>`");
      const std::string lhs = trim(rest.substr(0, eq));
      const std::string object = trim(rest.substr(eq + 1));
      if (object.empty() || object.find_first_of(" \t") != std::string::npos) {
        throw SyntaxError(lineno, 1, "expected a single object name after '='");
      }
      Formula atom = with_position(lineno, rest_col, [&] { return parse_formula(lhs, sig); });
      if (atom.kind() != Connective::Atom || !is_closed(atom)) {
        throw SortError("line " + std::to_string(lineno) + ": interp needs a closed atom");
      }
      for (const auto& a : th.assignments) {
        if (a.atom == atom) {
          throw MalformedInput("line " + std::to_string(lineno) + ": atom " + to_string(atom) + " assigned twice");
        }
      }
      th.assignments.push_back({std::move(atom), object, lineno});
    } else {
      throw SyntaxError(lineno, 1, "unknown directive '" + keyword + "'");
    }
  }
  return th;
}

Signature parse_signature(std::string_view text) { return parse_theory(text).signature; }

Theory load_theory(const std::filesystem::path& path) { return parse_theory(read_text_file(path)); }

const std::vector<Term>& TermUniverse::of(const std::string& sort) const {
  static const std::vector<Term> empty;
  auto it = terms.find(sort);
  return it == terms.end() ? empty : it->second;
}

TermUniverse enumerate_closed_terms(const Signature& sig, std::size_t depth, std::size_t limit) {
  if (depth < 1) throw MalformedInput("term universe depth must be at least 1");

  std::map<std::string, std::vector<Term>> upto;  // all terms so far
  std::size_t total = 0;

  for (std::size_t d = 1; d <= depth + 1; ++d) {
    std::map<std::string, std::vector<Term>> fresh;
    std::size_t produced = 0;
    for (const auto& fn : sig.functions) {
      if (fn.arg_sorts.empty()) {
        if (d == 1) fresh[fn.result_sort].push_back(Term::apply(fn.name, fn.result_sort));
        continue;
      }
      if (d == 1) continue;
      // All argument tuples from terms of depth < d with at least one of depth d-1.
      std::vector<const std::vector<Term>*> pools;
      bool possible = true;
      for (const auto& s : fn.arg_sorts) {
        pools.push_back(&upto[s]);
        if (upto[s].empty()) possible = false;
      }
      if (!possible) continue;
      std::vector<std::size_t> idx(pools.size(), 0);
      while (true) {
        std::vector<Term> args;
        std::size_t max_depth = 0;
        for (std::size_t i = 0; i < pools.size(); ++i) {
          args.push_back((*pools[i])[idx[i]]);
          max_depth = std::max(max_depth, args.back().depth());
        }
        if (max_depth == d - 1) {
          fresh[fn.result_sort].push_back(Term::apply(fn.name, fn.result_sort, std::move(args)));
          if (d == depth + 1) break;  // one witness settles saturation
          if (total + ++produced > limit) {
            throw ScaleExceeded("term universe exceeds " + std::to_string(limit) + " terms at depth " +
                                std::to_string(d));
          }
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == pools[k]->size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
    for (auto& [sort, list] : fresh) {
      std::sort(list.begin(), list.end(), [](const Term& a, const Term& b) { return to_string(a) < to_string(b); });
    }
    if (d == depth + 1) {
      bool adds = false;
      for (const auto& [sort, list] : fresh) adds = adds || !list.empty();
      TermUniverse u;
      u.depth = depth;
      u.saturated = !adds;
      for (const auto& s : sig.sorts) {
        u.terms[s] = upto[s];
        if (upto[s].empty()) u.empty_sorts.push_back(s);
      }
      return u;
    }
    for (auto& [sort, list] : fresh) {
      total += list.size();
      if (total > limit) {
        throw ScaleExceeded("term universe exceeds " + std::to_string(limit) + " terms at depth " + std::to_string(d));
      }
      auto& dst = upto[sort];
      dst.insert(dst.end(), list.begin(), list.end());
    }
  }
  return {};
}

}  // namespace ldcat
