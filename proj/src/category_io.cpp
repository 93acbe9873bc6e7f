// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ldcat/category_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ldcat/error.hpp"

namespace ldcat {
namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw MalformedInput("line " + std::to_string(line) + ": " + what);
}

}  // namespace

FinCategory parse_category(std::string_view text) {
  CategoryBuilder b;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;

  auto object = [&](const std::string& name) {
    auto o = b.find_object(name);
    if (!o) fail(lineno, "unknown object '" + name + "'");
    return *o;
  };
  auto arrow = [&](const std::string& name) {
    auto a = b.find_arrow(name);
    if (!a) fail(lineno, "unknown arrow '" + name + "'");
    return *a;
  };

  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto w = split_words(raw);
    if (w.empty()) continue;

    if (w[0] == "object") {
      if (w.size() != 2) throw SyntaxError(lineno, 1, "expected `object <name>`");
      if (b.has_object(w[1])) fail(lineno, "duplicate object '" + w[1] + "'");
      b.add_object(w[1]);
    } else if (w[0] == "arrow") {
      if (w.size() != 6 || w[2] != ":" || w[4] != "->") {
        throw SyntaxError(lineno, 1, "expected `arrow <name> : <dom> -> <cod>`");
      }
      if (b.find_arrow(w[1])) fail(lineno, "duplicate arrow '" + w[1] + "'");
      b.add_arrow(w[1], object(w[3]), object(w[5]));
    } else if (w[0] == "id") {
      if (w.size() != 4 || w[2] != "=") throw SyntaxError(lineno, 1, "expected `id <object> = <arrow>|auto`");
      ObjId o = object(w[1]);
      if (w[3] == "auto") {
        if (b.find_arrow("id_" + w[1])) fail(lineno, "arrow 'id_" + w[1] + "' already exists");
        b.add_auto_identity(o);
      } else {
        b.set_identity(o, arrow(w[3]));
      }
    } else if (w[0] == "compose") {
      if (w.size() != 6 || w[2] != "." || w[4] != "=") {
        throw SyntaxError(lineno, 1, "expected `compose <g> . <f> = <h>`");
      }
      b.set_composite(arrow(w[1]), arrow(w[3]), arrow(w[5]));
    } else {
      throw SyntaxError(lineno, 1, "unknown directive '" + w[0] + "'");
    }
  }
  return b.build();
}

std::string write_category(const FinCategory& c) {
  std::ostringstream out;
  for (ObjId o : c.objects()) out << "object " << c.name(o) << '\n';
  for (ArrId a : c.arrows()) {
    out << "arrow " << c.name(a) << " : " << c.name(c.dom(a)) << " -> " << c.name(c.cod(a)) << '\n';
  }
  for (ObjId o : c.objects()) out << "id " << c.name(o) << " = " << c.name(c.identity(o)) << '\n';
  for (ArrId g : c.arrows()) {
    for (ArrId f : c.arrows()) {
      if (auto h = c.composite(g, f)) {
        out << "compose " << c.name(g) << " . " << c.name(f) << " = " << c.name(*h) << '\n';
      }
    }
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FinCategory load_category(const std::filesystem::path& path) { return parse_category(read_text_file(path)); }

}  // namespace ldcat
