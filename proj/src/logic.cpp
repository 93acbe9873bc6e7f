// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ldcat/logic.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "ldcat/error.hpp"

namespace ldcat {

bool Signature::has_sort(std::string_view s) const { return std::find(sorts.begin(), sorts.end(), s) != sorts.end(); }

const FunctionSymbol* Signature::function(std::string_view name) const {
  for (const auto& f : functions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const RelationSymbol* Signature::relation(std::string_view name) const {
  for (const auto& r : relations) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

Term Term::variable(std::string name, std::string sort) {
  return Term{Kind::Variable, std::move(name), std::move(sort), {}};
}

Term Term::apply(std::string name, std::string sort, std::vector<Term> args) {
  return Term{Kind::Application, std::move(name), std::move(sort), std::move(args)};
}

bool Term::closed() const {
  if (is_variable()) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.closed(); });
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  return d + 1;
}

std::string to_string(const Term& t) {
  std::string out = t.name;
  if (t.args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ',';
    out += to_string(t.args[i]);
  }
  out += ')';
  return out;
}

std::set<Variable> free_vars(const Term& t) {
  std::set<Variable> out;
  if (t.is_variable()) {
    out.emplace(t.name, t.sort);
    return out;
  }
  for (const auto& a : t.args) out.merge(free_vars(a));
  return out;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Connective kind = Connective::Zero;
  std::string name;  // relation or bound variable
  std::string sort;
  std::vector<Term> args;
  std::vector<Formula> children;
  std::size_t depth = 0;
};

Formula::Formula() : Formula(zero()) {}

Formula Formula::zero() {
  static const auto node = std::make_shared<const Node>(Node{Connective::Zero, {}, {}, {}, {}, 0});
  return Formula(node);
}

Formula Formula::one() {
  static const auto node = std::make_shared<const Node>(Node{Connective::One, {}, {}, {}, {}, 0});
  return Formula(node);
}

Formula Formula::atom(std::string relation, std::vector<Term> args) {
  return Formula(std::make_shared<const Node>(Node{Connective::Atom, std::move(relation), {}, std::move(args), {}, 0}));
}

Formula Formula::times(Formula a, Formula b) {
  const std::size_t d = std::max(a.depth(), b.depth()) + 1;
  return Formula(std::make_shared<const Node>(Node{Connective::Times, {}, {}, {}, {std::move(a), std::move(b)}, d}));
}

Formula Formula::plus(Formula a, Formula b) {
  const std::size_t d = std::max(a.depth(), b.depth()) + 1;
  return Formula(std::make_shared<const Node>(Node{Connective::Plus, {}, {}, {}, {std::move(a), std::move(b)}, d}));
}

Formula Formula::arrow(Formula a, Formula b) {
  const std::size_t d = std::max(a.depth(), b.depth()) + 1;
  return Formula(std::make_shared<const Node>(Node{Connective::Arrow, {}, {}, {}, {std::move(a), std::move(b)}, d}));
}

Formula Formula::forall(std::string var, std::string sort, Formula body) {
  const std::size_t d = body.depth() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::Forall, std::move(var), std::move(sort), {}, {std::move(body)}, d}));
}

Formula Formula::exists(std::string var, std::string sort, Formula body) {
  const std::size_t d = body.depth() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::Exists, std::move(var), std::move(sort), {}, {std::move(body)}, d}));
}

Connective Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  return kind() == Connective::Times || kind() == Connective::Plus || kind() == Connective::Arrow;
}

bool Formula::is_quantifier() const { return kind() == Connective::Forall || kind() == Connective::Exists; }

const std::string& Formula::relation() const { return node_->name; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
const std::string& Formula::var() const { return node_->name; }
const std::string& Formula::sort() const { return node_->sort; }
const Formula& Formula::body() const { return node_->children.at(0); }
std::size_t Formula::depth() const { return node_->depth; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.sort == y.sort && x.args == y.args && x.children == y.children;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength used by the printer; higher binds tighter.
int strength(const Formula& f) {
  switch (f.kind()) {
    case Connective::Forall:
    case Connective::Exists: return 0;
    case Connective::Arrow: return 1;
    case Connective::Plus: return 2;
    case Connective::Times: return 3;
    default: return 4;
  }
}

const char* symbol(Connective k) {
  switch (k) {
    case Connective::Times: return " & ";
    case Connective::Plus: return " | ";
    case Connective::Arrow: return " -> ";
    default: return "";
  }
}

struct Printer {
  bool alpha = false;
  std::vector<std::pair<std::string, std::string>> bound;  // (source name, printed name)

  std::string term(const Term& t) const {
    if (t.is_variable()) {
      if (alpha) {
        for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
          if (it->first == t.name) return it->second;
        }
      }
      return t.name;
    }
    std::string out = t.name;
    if (t.args.empty()) return out;
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ',';
      out += term(t.args[i]);
    }
    return out + ')';
  }

  std::string operand(const Formula& f, int min_strength) {
    std::string s = print(f);
    if (f.is_quantifier() || strength(f) < min_strength) return "(" + s + ")";
    return s;
  }

  std::string print(const Formula& f) {
    switch (f.kind()) {
      case Connective::Zero: return "0";
      case Connective::One: return "1";
      case Connective::Atom: {
        std::string out = f.relation();
        if (f.args().empty()) return out;
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ',';
          out += term(f.args()[i]);
        }
        return out + ')';
      }
      case Connective::Arrow:
        return operand(f.left(), 2) + symbol(f.kind()) + operand(f.right(), 1);
      case Connective::Plus:
        return operand(f.left(), 2) + symbol(f.kind()) + operand(f.right(), 3);
      case Connective::Times:
        return operand(f.left(), 3) + symbol(f.kind()) + operand(f.right(), 4);
      case Connective::Forall:
      case Connective::Exists: {
        std::string name = f.var();
        if (alpha) name = "%" + std::to_string(bound.size());
        bound.emplace_back(f.var(), name);
        std::string out = (f.kind() == Connective::Forall ? "forall " : "exists ") + name + ":" + f.sort() + ". " +
                          print(f.body());
        bound.pop_back();
        return out;
      }
    }
    return {};
  }
};

}  // namespace

std::string to_string(const Formula& f) { return Printer{}.print(f); }

std::string alpha_key(const Formula& f) {
  Printer p;
  p.alpha = true;
  return p.print(f);
}

// ---------------------------------------------------------------------------
// Free variables and substitution

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<Variable>& out) {
  switch (f.kind()) {
    case Connective::Zero:
    case Connective::One: return;
    case Connective::Atom:
      for (const auto& t : f.args()) {
        for (const auto& v : free_vars(t)) {
          if (std::find(bound.begin(), bound.end(), v.first) == bound.end()) out.insert(v);
        }
      }
      return;
    case Connective::Times:
    case Connective::Plus:
    case Connective::Arrow:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      return;
    case Connective::Forall:
    case Connective::Exists:
      bound.push_back(f.var());
      collect_free(f.body(), bound, out);
      bound.pop_back();
      return;
  }
}

Term substitute_term(const Term& term, const std::string& var, const Term& t) {
  if (term.is_variable()) {
    if (term.name != var) return term;
    if (term.sort != t.sort) {
      throw SortMismatch("cannot substitute " + to_string(t) + " : " + t.sort + " for " + var + " : " + term.sort);
    }
    return t;
  }
  Term out = term;
  for (auto& a : out.args) a = substitute_term(a, var, t);
  return out;
}

}  // namespace

std::set<Variable> free_vars(const Formula& f) {
  std::vector<std::string> bound;
  std::set<Variable> out;
  collect_free(f, bound, out);
  return out;
}

bool is_closed(const Formula& f) { return free_vars(f).empty(); }

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  switch (f.kind()) {
    case Connective::Zero:
    case Connective::One: return f;
    case Connective::Atom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const auto& a : f.args()) args.push_back(substitute_term(a, var, t));
      return Formula::atom(f.relation(), std::move(args));
    }
    case Connective::Times: return Formula::times(substitute(f.left(), var, t), substitute(f.right(), var, t));
    case Connective::Plus: return Formula::plus(substitute(f.left(), var, t), substitute(f.right(), var, t));
    case Connective::Arrow: return Formula::arrow(substitute(f.left(), var, t), substitute(f.right(), var, t));
    case Connective::Forall:
      if (f.var() == var) return f;
      return Formula::forall(f.var(), f.sort(), substitute(f.body(), var, t));
    case Connective::Exists:
      if (f.var() == var) return f;
      return Formula::exists(f.var(), f.sort(), substitute(f.body(), var, t));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum class Kind { Ident, Zero, One, LParen, RParen, Comma, Colon, Dot, Amp, Bar, Arrow, End };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    const std::size_t start_col = col;
    auto push = [&](Token::Kind k, std::size_t len) {
      out.push_back({k, std::string(text.substr(i, len)), line, start_col});
      i += len;
      col += len;
    };
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
    } else if (c == '(') {
      push(Token::Kind::LParen, 1);
    } else if (c == ')') {
      push(Token::Kind::RParen, 1);
    } else if (c == ',') {
      push(Token::Kind::Comma, 1);
    } else if (c == ':') {
      push(Token::Kind::Colon, 1);
    } else if (c == '.') {
      push(Token::Kind::Dot, 1);
    } else if (c == '&') {
      push(Token::Kind::Amp, 1);
    } else if (c == '|') {
      push(Token::Kind::Bar, 1);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Token::Kind::Arrow, 2);
    } else if (ident_char(c)) {
      std::size_t len = 1;
      while (i + len < text.size() && ident_char(text[i + len])) ++len;
      std::string_view word = text.substr(i, len);
      if (word == "0") {
        push(Token::Kind::Zero, len);
      } else if (word == "1") {
        push(Token::Kind::One, len);
      } else {
        push(Token::Kind::Ident, len);
      }
    } else {
      throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, const std::map<std::string, std::string>& context)
      : tokens_(lex(text)), sig_(sig), context_(context) {}

  Formula formula_to_end() {
    Formula f = formula();
    expect(Token::Kind::End, "end of input");
    return f;
  }

  Term term_to_end() {
    Term t = term();
    expect(Token::Kind::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) {
      throw SyntaxError(peek().line, peek().column,
                        "expected " + what + (peek().kind == Token::Kind::End ? " at end of input"
                                                                               : ", found '" + peek().text + "'"));
    }
    return next();
  }

  bool at_quantifier() const {
    return peek().kind == Token::Kind::Ident && (peek().text == "forall" || peek().text == "exists");
  }

  Formula formula() {
    if (at_quantifier()) return quantifier();
    Formula lhs = disjunction();
    if (accept(Token::Kind::Arrow)) return Formula::arrow(lhs, formula());
    return lhs;
  }

  Formula quantifier() {
    const bool universal = next().text == "forall";
    const Token& var = expect(Token::Kind::Ident, "a variable name");
    expect(Token::Kind::Colon, "':'");
    const Token& sort = expect(Token::Kind::Ident, "a sort name");
    if (!sig_.has_sort(sort.text)) {
      throw UnknownSymbol("line " + std::to_string(sort.line) + ", column " + std::to_string(sort.column) +
                          ": unknown sort '" + sort.text + "'");
    }
    expect(Token::Kind::Dot, "'.'");
    scopes_.emplace_back(var.text, sort.text);
    Formula body = formula();
    scopes_.pop_back();
    return universal ? Formula::forall(var.text, sort.text, body) : Formula::exists(var.text, sort.text, body);
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (accept(Token::Kind::Bar)) lhs = Formula::plus(lhs, conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (accept(Token::Kind::Amp)) lhs = Formula::times(lhs, unary());
    return lhs;
  }

  Formula unary() {
    if (at_quantifier()) return quantifier();
    if (accept(Token::Kind::Zero)) return Formula::zero();
    if (accept(Token::Kind::One)) return Formula::one();
    if (accept(Token::Kind::LParen)) {
      Formula f = formula();
      expect(Token::Kind::RParen, "')'");
      return f;
    }
    const Token& name = expect(Token::Kind::Ident, "a formula");
    const RelationSymbol* rel = sig_.relation(name.text);
    if (!rel) {
      throw UnknownSymbol("line " + std::to_string(name.line) + ", column " + std::to_string(name.column) +
                          ": unknown relation '" + name.text + "'");
    }
    std::vector<Term> args;
    if (accept(Token::Kind::LParen)) {
      args.push_back(term());
      while (accept(Token::Kind::Comma)) args.push_back(term());
      expect(Token::Kind::RParen, "')'");
    }
    check_arity(name, rel->arg_sorts, args, "relation");
    return Formula::atom(name.text, std::move(args));
  }

  Term term() {
    const Token& name = expect(Token::Kind::Ident, "a term");
    if (peek().kind != Token::Kind::LParen) {
      for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
        if (it->first == name.text) return Term::variable(name.text, it->second);
      }
      if (auto it = context_.find(name.text); it != context_.end()) return Term::variable(name.text, it->second);
    }
    const FunctionSymbol* fn = sig_.function(name.text);
    if (!fn) {
      throw UnknownSymbol("line " + std::to_string(name.line) + ", column " + std::to_string(name.column) +
                          ": unknown function or variable '" + name.text + "'");
    }
    std::vector<Term> args;
    if (accept(Token::Kind::LParen)) {
      args.push_back(term());
      while (accept(Token::Kind::Comma)) args.push_back(term());
      expect(Token::Kind::RParen, "')'");
    }
    check_arity(name, fn->arg_sorts, args, "function");
    return Term::apply(name.text, fn->result_sort, std::move(args));
  }

  void check_arity(const Token& name, const std::vector<std::string>& sorts, const std::vector<Term>& args,
                   const char* what) {
    const std::string where = "line " + std::to_string(name.line) + ", column " + std::to_string(name.column) + ": ";
    if (sorts.size() != args.size()) {
      throw SortError(where + what + " '" + name.text + "' expects " + std::to_string(sorts.size()) +
                      " arguments, got " + std::to_string(args.size()));
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i].sort != sorts[i]) {
        throw SortError(where + "argument " + std::to_string(i + 1) + " of '" + name.text + "' has sort " +
                        args[i].sort + ", expected " + sorts[i]);
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature& sig_;
  const std::map<std::string, std::string>& context_;
  std::vector<std::pair<std::string, std::string>> scopes_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig, const std::map<std::string, std::string>& context) {
  return Parser(text, sig, context).formula_to_end();
}

Term parse_term(std::string_view text, const Signature& sig, const std::map<std::string, std::string>& context) {
  return Parser(text, sig, context).term_to_end();
}

}  // namespace ldcat
