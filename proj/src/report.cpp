// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ldcat/report.hpp"

#include <cstdio>

namespace ldcat {
namespace {

constexpr std::string_view kTimingMarker = "# timing\n";

std::string pad4(std::size_t n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04zu", n);
  return buf;
}

std::string verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

}  // namespace

std::string escape_value(std::string_view v) {
  std::string out;
  out.reserve(v.size());
  for (char ch : v) {
    switch (ch) {
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  return out;
}

void Report::put(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }

void Report::put_timing(std::string key, double millis) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", millis);
  timing_.emplace_back("timing." + key + "_ms", buf);
}

void Report::put_text(const std::string& prefix, std::string_view text) {
  std::size_t n = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    put(prefix + ".line." + pad4(++n), std::string(text.substr(0, nl)));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  put(prefix + ".lines", n);
}

std::string Report::render(bool with_timing) const {
  std::string out = "ldcat.report.version=1\n";
  for (const auto& [k, v] : entries_) out += k + "=" + escape_value(v) + "\n";
  if (with_timing) {
    out += kTimingMarker;
    for (const auto& [k, v] : timing_) out += k + "=" + v + "\n";
  }
  return out;
}

std::string comparable_section(std::string_view rendered) {
  const auto pos = rendered.find(kTimingMarker);
  return std::string(rendered.substr(0, pos));
}

void add_validation(Report& r, const FinCategory& c, const ValidationReport& v) {
  r.put("validation.objects", c.object_count());
  r.put("validation.arrows", c.arrow_count());
  r.put("validation.verdict", verdict(v.ok()));
  r.put("validation.violations", v.violations.size());
  for (std::size_t i = 0; i < v.violations.size(); ++i) {
    r.put("validation.violation." + pad4(i + 1), std::string(to_string(v.violations[i].kind)) + ": " +
                                                     v.violations[i].message);
  }
}

void add_interpretation(Report& r, const Interpretation& interp) {
  const TermUniverse& u = interp.universe();
  r.put("universe.depth", u.depth);
  r.put("universe.saturated", u.saturated);
  for (const auto& sort : interp.signature().sorts) {
    std::string terms;
    for (const Term& t : u.of(sort)) terms += (terms.empty() ? "" : ",") + to_string(t);
    r.put("universe.sort." + sort, terms);
  }
  const ReachSet& reach = interp.reach();
  r.put("reach.depth", reach.depth);
  r.put("reach.saturated", reach.saturated);
  r.put("reach.converged", reach.converged);
  r.put("reach.refinements", reach.refinements);
  r.put("reach.size", reach.members.size());
  for (ObjId o : reach.members) {
    r.put("reach.member." + std::string(interp.category().name(o)), to_string(*reach.provenance[o.index]));
  }
  for (std::size_t i = 0; i < interp.warnings().size(); ++i) r.put("warning." + pad4(i + 1), interp.warnings()[i]);
}

void add_conditions(Report& r, const ConditionReport& cr) {
  for (const auto& c : cr.conditions) {
    const std::string k = "condition." + std::to_string(c.number);
    r.put(k + ".title", c.title);
    r.put(k + ".verdict", verdict(c.pass));
    r.put(k + ".checked", c.checked);
    for (std::size_t i = 0; i < c.details.size(); ++i) r.put(k + ".detail." + pad4(i + 1), c.details[i]);
  }
  r.put("conditions.verdict", verdict(cr.all_pass()));
}

void add_delta(Report& r, const FinCategory& c, const std::vector<DeltaCertificate>& certs) {
  std::size_t passed = 0;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const DeltaCertificate& d = certs[i];
    const std::string k = "delta." + pad4(i + 1);
    r.put(k + ".objects", std::string(c.name(d.a)) + "," + std::string(c.name(d.b)) + "," + std::string(c.name(d.c)));
    r.put(k + ".delta", std::string(c.name(d.delta.arrow)));
    r.put(k + ".inverse", std::string(c.name(d.delta_inverse.arrow)));
    r.put(k + ".inverse_expr", d.delta_inverse.expr);
    r.put(k + ".verdict", verdict(d.ok()));
    passed += d.ok();
  }
  r.put("delta.count", certs.size());
  r.put("delta.passed", passed);
}

void add_frobenius(Report& r, const FinCategory& c, const std::vector<FrobeniusCertificate>& certs,
                   const std::vector<std::pair<std::string, std::string>>& failures) {
  std::size_t passed = 0;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const FrobeniusCertificate& f = certs[i];
    const std::string k = "frobenius." + pad4(i + 1);
    r.put(k + ".instance", f.instance.label());
    r.put(k + ".source", std::string(c.name(f.source)));
    r.put(k + ".target", std::string(c.name(f.target)));
    r.put(k + ".alpha", f.alpha.expr);
    r.put(k + ".beta", f.beta.expr);
    r.put(k + ".alpha_after_beta", f.alpha_after_beta);
    r.put(k + ".beta_after_alpha", f.beta_after_alpha);
    r.put(k + ".naturality", f.naturality);
    r.put(k + ".initiality.vertices", f.initiality.vertices);
    r.put(k + ".initiality.families", f.initiality.families);
    r.put(k + ".initiality.truncated", f.initiality.truncated);
    if (!f.initiality.pass) r.put(k + ".initiality.failure", f.initiality.failure);
    r.put(k + ".verdict", verdict(f.ok()));
    passed += f.ok();
  }
  for (std::size_t i = 0; i < failures.size(); ++i) {
    const std::string k = "frobenius.error." + pad4(i + 1);
    r.put(k + ".instance", failures[i].first);
    r.put(k + ".message", failures[i].second);
  }
  r.put("frobenius.count", certs.size() + failures.size());
  r.put("frobenius.passed", passed);
}

}  // namespace ldcat
