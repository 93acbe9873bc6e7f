// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0
//
// ldcat: validate finite categories and check interpretations of
// first-order theories in them.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ldcat/category_io.hpp"
#include "ldcat/conditions.hpp"
#include "ldcat/error.hpp"
#include "ldcat/heyting.hpp"
#include "ldcat/report.hpp"
#include "ldcat/suite.hpp"
#include "ldcat/theorems.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kVerdictFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string model;
  std::string theory;
  std::string formula;
  std::optional<std::size_t> depth;
  std::size_t reach = 3;
  std::size_t family_cap = 4096;
  std::string report;
  std::string kind;
  std::size_t n = 0;
  std::string out;
};

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt), start_(Clock::now()) {}

  ldcat::FinCategory load_model() {
    model_text_ = ldcat::read_text_file(opt_.model);
    report_.put("model.path", opt_.model);
    report_.put_text("model", model_text_);
    return ldcat::parse_category(model_text_);
  }

  ldcat::Interpretation load_interpretation() {
    const ldcat::FinCategory c = load_model();
    const std::string text = ldcat::read_text_file(opt_.theory);
    report_.put("theory.path", opt_.theory);
    report_.put_text("theory", text);
    const ldcat::Theory theory = ldcat::parse_theory(text);
    report_.put("option.depth", opt_.depth ? std::to_string(*opt_.depth) : std::string("theory"));
    report_.put("option.reach", opt_.reach);
    report_.put("option.family_cap", opt_.family_cap);
    const ldcat::ValidationReport v = ldcat::validate_category(c);
    ldcat::add_validation(report_, c, v);
    if (!v.ok()) {
      throw ldcat::MalformedInput("category law violated: " + v.violations.front().message);
    }
    ldcat::Interpretation interp =
        ldcat::build_interpretation(c, theory, opt_.depth, opt_.reach, ldcat::SearchLimits{opt_.family_cap});
    ldcat::add_interpretation(report_, interp);
    return interp;
  }

  ldcat::Report& report() { return report_; }

  void finish(std::string_view command, int code) {
    report_.put("command", std::string(command));
    report_.put("exit_code", static_cast<std::size_t>(code));
    report_.put_timing("total", millis_since(start_));
    if (opt_.report.empty()) return;
    std::ofstream out(opt_.report, std::ios::binary);
    if (!out) throw ldcat::MalformedInput("cannot write report " + opt_.report);
    out << report_.render();
  }

 private:
  const Options& opt_;
  Clock::time_point start_;
  ldcat::Report report_;
  std::string model_text_;
};

int run_validate(Session& s) {
  const ldcat::FinCategory c = s.load_model();
  const ldcat::ValidationReport v = ldcat::validate_category(c);
  ldcat::add_validation(s.report(), c, v);
  for (const auto& violation : v.violations) {
    std::cout << ldcat::to_string(violation.kind) << ": " << violation.message << "\n";
  }
  std::cout << "validate: " << c.object_count() << " objects, " << c.arrow_count() << " arrows, "
            << (v.ok() ? "PASS" : "FAIL") << "\n";
  return v.ok() ? kPass : kVerdictFailed;
}

int run_interpret(Session& s, const Options& opt) {
  ldcat::Interpretation interp = s.load_interpretation();
  const ldcat::Formula f = ldcat::parse_formula(opt.formula, interp.signature());
  if (!ldcat::is_closed(f)) throw ldcat::MalformedInput("formula is not closed: " + ldcat::to_string(f));
  s.report().put("interpret.formula", ldcat::to_string(f));
  const ldcat::ObjId o = interp.interpret(f);
  const std::string name(interp.category().name(o));
  s.report().put("interpret.object", name);
  for (const auto& w : interp.warnings()) std::cerr << "warning: " << w << "\n";
  std::cout << ldcat::to_string(f) << " = " << name << "\n";
  return kPass;
}

int run_check(Session& s) {
  ldcat::Interpretation interp = s.load_interpretation();
  const auto instances = ldcat::default_instances(interp.signature(), interp.universe());
  const auto checked = ldcat::checked_formulas(interp, instances);
  const ldcat::ConditionReport cr = ldcat::check_conditions(interp, checked, instances);
  ldcat::add_conditions(s.report(), cr);
  for (const auto& c : cr.conditions) {
    std::cout << "condition " << c.number << " (" << c.title << "): " << (c.pass ? "PASS" : "FAIL") << " ["
              << c.checked << " checked]\n";
    for (const auto& d : c.details) std::cout << "  " << d << "\n";
  }
  for (const auto& w : interp.warnings()) std::cerr << "warning: " << w << "\n";
  return cr.all_pass() ? kPass : kVerdictFailed;
}

int run_redundancy(Session& s) {
  ldcat::Interpretation interp = s.load_interpretation();
  const ldcat::StructureTable& st = interp.structure();
  const ldcat::FinCategory& c = interp.category();

  std::vector<ldcat::DeltaCertificate> deltas;
  std::size_t delta_errors = 0;
  for (ldcat::ObjId a : c.objects()) {
    for (ldcat::ObjId b : c.objects()) {
      for (ldcat::ObjId x : c.objects()) {
        try {
          deltas.push_back(ldcat::certify_delta(st, a, b, x));
        } catch (const ldcat::Error& e) {
          ++delta_errors;
          s.report().put("delta.error." + std::to_string(delta_errors),
                         c.name(a) + "," + c.name(b) + "," + c.name(x) + ": " + e.what());
          std::cout << "delta (" << c.name(a) << ", " << c.name(b) << ", " << c.name(x) << "): " << e.what() << "\n";
        }
      }
    }
  }
  ldcat::add_delta(s.report(), c, deltas);

  std::vector<ldcat::FrobeniusCertificate> certs;
  std::vector<std::pair<std::string, std::string>> failures;
  for (const auto& inst : ldcat::default_instances(interp.signature(), interp.universe())) {
    try {
      certs.push_back(ldcat::verify_frobenius(interp, inst));
    } catch (const ldcat::Error& e) {
      failures.emplace_back(inst.label(), e.what());
      std::cout << "frobenius " << inst.label() << ": " << e.what() << "\n";
    }
  }
  ldcat::add_frobenius(s.report(), c, certs, failures);

  std::size_t delta_ok = 0, frob_ok = 0;
  for (const auto& d : deltas) delta_ok += d.ok();
  for (const auto& f : certs) frob_ok += f.ok();
  std::cout << "delta certificates: " << delta_ok << "/" << deltas.size() + delta_errors << " PASS\n";
  std::cout << "frobenius certificates: " << frob_ok << "/" << certs.size() + failures.size() << " PASS\n";
  const bool pass = delta_errors == 0 && delta_ok == deltas.size() && failures.empty() && frob_ok == certs.size();
  return pass ? kPass : kVerdictFailed;
}

int run_gen(Session& s, const Options& opt) {
  ldcat::HeytingModel m = opt.kind == "chain"      ? ldcat::gen_chain(opt.n)
                          : opt.kind == "powerset" ? ldcat::gen_powerset(opt.n)
                                                   : ldcat::gen_diamond();
  const std::string text = "# " + m.id() + "\n" + ldcat::write_category(m.to_category());
  s.report().put("gen.kind", opt.kind);
  s.report().put("gen.n", opt.n);
  s.report().put("gen.objects", m.size());
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw ldcat::MalformedInput("cannot write " + opt.out);
    out << text;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Finite category and categorical semantics checker"};
  app.require_subcommand(1);
  app.add_option("--report", opt.report, "Write the key=value report to this path");

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", opt.model, "Category file")->required()->check(CLI::ExistingFile);
  };
  auto add_theory = [&](CLI::App* sub) {
    add_model(sub);
    sub->add_option("--theory", opt.theory, "Theory file")->required()->check(CLI::ExistingFile);
    sub->add_option("--depth", opt.depth, "Closed-term depth bound (default: the theory's depth line, else 1)");
    sub->add_option("--reach", opt.reach, "Formula depth of the reachable-object set")->capture_default_str();
    sub->add_option("--family-cap", opt.family_cap, "Cone families examined per vertex")->capture_default_str();
  };

  CLI::App* validate = app.add_subcommand("validate", "Check the category laws of a model file");
  add_model(validate);
  CLI::App* interpret = app.add_subcommand("interpret", "Interpret one closed formula");
  add_theory(interpret);
  interpret->add_option("--formula", opt.formula, "Closed formula")->required();
  CLI::App* check = app.add_subcommand("check", "Check the seven interpretation conditions");
  add_theory(check);
  CLI::App* redundancy = app.add_subcommand("redundancy", "Build distributivity and Frobenius certificates");
  add_theory(redundancy);
  CLI::App* gen = app.add_subcommand("gen", "Generate a finite Heyting algebra as a category file");
  gen->add_option("--kind", opt.kind, "chain, powerset or diamond")
      ->required()
      ->check(CLI::IsMember({"chain", "powerset", "diamond"}));
  gen->add_option("--n", opt.n, "Chain length or powerset base size");
  gen->add_option("--out", opt.out, "Output path (default: stdout)");
  for (CLI::App* sub : {validate, interpret, check, redundancy, gen}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  Session session(opt);
  std::string command;
  try {
    int code = kPass;
    if (validate->parsed()) {
      command = "validate";
      code = run_validate(session);
    } else if (interpret->parsed()) {
      command = "interpret";
      code = run_interpret(session, opt);
    } else if (check->parsed()) {
      command = "check";
      code = run_check(session);
    } else if (redundancy->parsed()) {
      command = "redundancy";
      code = run_redundancy(session);
    } else {
      command = "gen";
      if (opt.kind != "diamond" && opt.n == 0) throw ldcat::MalformedInput("--n is required for " + opt.kind);
      code = run_gen(session, opt);
    }
    session.finish(command, code);
    return code;
  } catch (const ldcat::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ldcat::Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    try {
      session.finish(command, kVerdictFailed);
    } catch (const ldcat::Error&) {
    }
    return kVerdictFailed;
  }
}
