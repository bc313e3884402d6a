// Command-line driver. Exit codes: 0 success or provable, 1 unprovable or
// invalid, 2 budget exhausted or unknown, 3 usage error, 4 I/O or format
// error. Every failure prints one line to stderr prefixed "error[tag]:".

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "proofbench/dag.hpp"
#include "proofbench/experiments.hpp"
#include "proofbench/kripke.hpp"
#include "proofbench/naive_prover.hpp"
#include "proofbench/sc.hpp"
#include "proofbench/sc_prover.hpp"
#include "proofbench/translate.hpp"

using namespace proofbench;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 3;
constexpr int kIo = 4;

struct Bail {
  int code;
};

[[noreturn]] void bail(int code, const char* tag, const std::string& msg) {
  std::cerr << "error[" << tag << "]: " << msg << "\n";
  throw Bail{code};
}

Formula parse_arg(const std::string& text) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    bail(kUsage, "parse", std::string(e.what()));
  }
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bail(kIo, "io", "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    bail(kIo, "format", path + ": " + e.what());
  }
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bail(kIo, "io", "cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out.good()) bail(kIo, "io", "short write to " + path);
}

std::string path_str(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::string s;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(path[i]);
  }
  return s;
}

const CalculusProfile& calculus_arg(const std::string& name) {
  const CalculusProfile* p = CalculusProfile::by_name(name);
  if (!p) bail(kUsage, "usage", "unknown calculus '" + name + "'");
  return *p;
}

const NdProfile& profile_arg(const std::string& name) {
  const NdProfile* p = NdProfile::by_name(name);
  if (!p) bail(kUsage, "usage", "unknown profile '" + name + "'");
  return *p;
}

ScDerivation sc_arg(const std::string& path) {
  try {
    return sc_from_json(load_json(path));
  } catch (const std::invalid_argument& e) {
    bail(kIo, "format", path + ": " + e.what());
  }
}

NdDerivation nd_arg(const std::string& path) {
  try {
    return nd_from_json(load_json(path));
  } catch (const std::invalid_argument& e) {
    bail(kIo, "format", path + ": " + e.what());
  }
}

ProofDag dag_arg(const std::string& path) {
  try {
    return dag_from_json(load_json(path));
  } catch (const std::invalid_argument& e) {
    bail(kIo, "format", path + ": " + e.what());
  }
}

int run_prove(const std::string& calculus, const std::string& text, const std::string& emit,
              uint32_t budget) {
  const CalculusProfile& prof = calculus_arg(calculus);
  Formula f = parse_arg(text);
  ProveResult r = prove_sc(f, prof, budget);
  switch (r.status) {
    case ProveStatus::Proved: {
      ScCheckResult chk = check_sc(*r.derivation, prof);
      if (!chk.valid)
        bail(kNegative, "internal", "search produced a derivation that does not check: " + chk.reason);
      std::string out = dump_json(sc_to_json(*r.derivation));
      if (emit.empty())
        std::cout << out;
      else
        write_file(emit, out);
      return kOk;
    }
    case ProveStatus::Unprovable:
      std::cout << "unprovable\n";
      return kNegative;
    case ProveStatus::BudgetExhausted:
      std::cout << "budget-exhausted\n";
      return kUnknown;
  }
  return kUnknown;
}

int run_oracle(const std::string& text, uint32_t max_worlds, const std::string& semantics) {
  Formula f = parse_arg(text);
  KripkeSemantics sem = semantics == "intuitionistic" ? KripkeSemantics::Intuitionistic
                                                      : KripkeSemantics::Minimal;
  if (implicational_only(f)) {
    // the naive prover decides the minimal reading outright; a positive
    // verdict transfers to the intuitionistic reading too
    if (naive_provable(f)) {
      std::cout << "provable (naive prover)\n";
      return kOk;
    }
    if (sem == KripkeSemantics::Minimal) {
      KripkeResult kr = kripke_refute(f, sem, max_worlds);
      std::cout << "unprovable (naive prover)";
      if (kr.refuted)
        std::cout << "; countermodel " << format_kripke_model(*kr.model) << " fails at world "
                  << kr.world;
      std::cout << "\n";
      return kNegative;
    }
  }
  KripkeResult kr = kripke_refute(f, sem, max_worlds);
  if (kr.refuted) {
    std::cout << "refuted; countermodel " << format_kripke_model(*kr.model) << " fails at world "
              << kr.world << "\n";
    return kNegative;
  }
  std::cout << "unknown (no countermodel within " << max_worlds << " worlds)\n";
  return kUnknown;
}

int emit_report(const ExperimentReport& rep, const std::string& json_path,
                const std::string& csv_path) {
  if (!json_path.empty()) write_file(json_path, dump_json(rep.json));
  if (!csv_path.empty()) {
    if (rep.csv.empty()) bail(kUsage, "usage", "this experiment has no csv output");
    write_file(csv_path, rep.csv);
  }
  std::cout << rep.text;
  return rep.passed ? kOk : kNegative;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof workbench for minimal and intuitionistic propositional logic"};
  app.require_subcommand(1);
  app.failure_message(
      [](const CLI::App*, const CLI::Error& e) { return "error[usage]: " + std::string(e.what()) + "\n"; });
  app.footer(R"(formula grammar:
  formula ::= imp
  imp     ::= or ('->' imp)?            right-associative, binds loosest
  or      ::= and ('|' and)*            left-associative
  and     ::= unit ('&' unit)*          left-associative, binds tightest
  unit    ::= atom | 'bot' | '_|_' | '(' formula ')'
  atom    ::= '_'? [a-z] [a-z0-9_]*

whitespace is insignificant; atom names starting with '_' are reserved for
generated atoms.

exit codes: 0 success/provable, 1 unprovable/invalid, 2 budget/unknown,
3 usage error, 4 i/o or format error.)");

  int code = kOk;
  std::string formula_text, file, out, emit, calculus, profile = "nm-full", level;
  std::string semantics = "minimal", family, json_path, csv_path, atoms_csv = "p,q";
  uint32_t budget = kDefaultBudgetMultiplier, max_worlds = 5, max_connectives = 7, max_index = 24;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print its canonical form");
  parse_cmd->add_option("formula", formula_text, "formula text")->required();
  parse_cmd->callback([&] {
    std::cout << format(parse_arg(formula_text)) << "\n";
  });

  auto* prove_cmd = app.add_subcommand("prove", "backward proof search");
  prove_cmd->add_option("formula", formula_text, "goal formula")->required();
  prove_cmd->add_option("--calculus", calculus, "calculus profile")
      ->required()
      ->check(CLI::IsMember({"lg-int", "lg-min", "lm-imp"}));
  prove_cmd->add_option("--emit", emit, "write the derivation to this file instead of stdout");
  prove_cmd->add_option("--budget-multiplier", budget, "depth budget multiplier for budgeted profiles");
  prove_cmd->callback([&] { code = run_prove(calculus, formula_text, emit, budget); });

  auto* check_sc_cmd = app.add_subcommand("check-sc", "check a sequent derivation file");
  check_sc_cmd->add_option("file", file, "derivation json")->required();
  check_sc_cmd->add_option("--calculus", calculus, "calculus profile")
      ->required()
      ->check(CLI::IsMember({"lg-int", "lg-min", "lm-imp"}));
  check_sc_cmd->callback([&] {
    ScCheckResult res = check_sc(sc_arg(file), calculus_arg(calculus));
    if (res.valid) {
      std::cout << "valid\n";
      code = kOk;
    } else {
      std::cout << "invalid at " << path_str(res.path) << ": " << res.reason << "\n";
      code = kNegative;
    }
  });

  auto* check_nd_cmd = app.add_subcommand("check-nd", "check a natural deduction file");
  check_nd_cmd->add_option("file", file, "deduction json")->required();
  check_nd_cmd->add_option("--profile", profile, "deduction profile")
      ->required()
      ->check(CLI::IsMember({"nm-full", "nm-int", "nm-imp"}));
  check_nd_cmd->callback([&] {
    NdCheckResult res = check_nd(nd_arg(file), profile_arg(profile));
    if (res.valid) {
      std::cout << "valid\n";
      code = kOk;
    } else {
      std::cout << "invalid at " << path_str(res.path) << ": " << res.reason << "\n";
      code = kNegative;
    }
  });

  auto* check_dag_cmd = app.add_subcommand("check-dag", "check a shared deduction file");
  check_dag_cmd->add_option("file", file, "dag json")->required();
  check_dag_cmd->add_option("--profile", profile, "deduction profile")
      ->required()
      ->check(CLI::IsMember({"nm-full", "nm-int", "nm-imp"}));
  check_dag_cmd->callback([&] {
    DagCheckResult res = check_dag(dag_arg(file), profile_arg(profile));
    if (res.valid) {
      std::cout << "valid\n";
      code = kOk;
    } else {
      std::cout << "invalid: " << res.reason << "\n";
      code = kNegative;
    }
  });

  auto* translate_cmd =
      app.add_subcommand("translate", "turn a sequent derivation into a natural deduction");
  translate_cmd->add_option("file", file, "derivation json")->required();
  translate_cmd->add_option("--out", out, "output deduction json")->required();
  translate_cmd->add_option("--profile", profile, "target deduction profile")
      ->check(CLI::IsMember({"nm-full", "nm-int", "nm-imp"}));
  translate_cmd->callback([&] {
    ScDerivation d = sc_arg(file);
    ScCheckResult chk = check_sc(d, CalculusProfile::lg_int());
    if (!chk.valid)
      bail(kNegative, "invalid",
           "input does not check at " + path_str(chk.path) + ": " + chk.reason);
    const NdProfile& target = profile_arg(profile);
    std::optional<NdDerivation> nd;
    try {
      nd = translate_sc_to_nd(d, target);
    } catch (const std::invalid_argument& e) {
      bail(kNegative, "translate", e.what());
    }
    NdCheckResult ndchk = check_nd(*nd, target);
    if (!ndchk.valid)
      bail(kNegative, "internal", "translation does not check: " + ndchk.reason);
    write_file(out, dump_json(nd_to_json(*nd)));
    code = kOk;
  });

  auto* compress_cmd = app.add_subcommand("compress", "share repeated subdeductions");
  compress_cmd->add_option("file", file, "deduction json")->required();
  compress_cmd->add_option("--level", level, "compression level")
      ->required()
      ->check(CLI::IsMember({"l1", "l2"}));
  compress_cmd->add_option("--out", out, "output dag json")->required();
  compress_cmd->add_option("--profile", profile, "deduction profile for validation")
      ->check(CLI::IsMember({"nm-full", "nm-int", "nm-imp"}));
  compress_cmd->callback([&] {
    NdDerivation nd = nd_arg(file);
    const NdProfile& prof = profile_arg(profile);
    NdCheckResult chk = check_nd(nd, prof);
    if (!chk.valid)
      bail(kNegative, "invalid",
           "input does not check at " + path_str(chk.path) + ": " + chk.reason);
    ProofDag dag = compress(nd, level == "l1" ? CompressLevel::L1 : CompressLevel::L2);
    DagCheckResult dchk = check_dag(dag, prof);
    if (!dchk.valid) bail(kNegative, "internal", "compression does not check: " + dchk.reason);
    write_file(out, dump_json(dag_to_json(dag)));
    code = kOk;
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "independent verdict: naive prover plus countermodel search");
  oracle_cmd->add_option("formula", formula_text, "formula text")->required();
  oracle_cmd->add_option("--max-worlds", max_worlds, "countermodel world budget")
      ->check(CLI::Range(1u, 6u));
  oracle_cmd->add_option("--semantics", semantics, "bot handling")
      ->check(CLI::IsMember({"minimal", "intuitionistic"}));
  oracle_cmd->callback([&] { code = run_oracle(formula_text, max_worlds, semantics); });

  auto* exp_cmd = app.add_subcommand("experiment", "scripted demonstrations");
  exp_cmd->require_subcommand(1);
  auto* ce = exp_cmd->add_subcommand("counterexample", "incompleteness demonstration");
  ce->add_option("--json", json_path, "write the machine-readable report here");
  ce->callback([&] { code = emit_report(counterexample_report(), json_path, csv_path); });
  auto* sw = exp_cmd->add_subcommand("sweep", "exhaustive oracle agreement sweep");
  sw->add_option("--max-connectives", max_connectives, "arrow budget")->check(CLI::Range(0u, 9u));
  sw->add_option("--atoms", atoms_csv, "comma-separated atom names (bot is always included)");
  sw->add_option("--json", json_path, "write the machine-readable report here");
  sw->callback([&] {
    SweepOptions opt;
    opt.max_connectives = max_connectives;
    opt.atoms.clear();
    std::stringstream ss(atoms_csv);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) opt.atoms.push_back(item);
    if (opt.atoms.empty()) bail(kUsage, "usage", "--atoms needs at least one name");
    for (const auto& a : opt.atoms)
      parse_arg(a); // names must be atoms
    try {
      code = emit_report(agreement_sweep(opt), json_path, csv_path);
    } catch (const std::invalid_argument& e) {
      bail(kUsage, "usage", e.what());
    }
  });
  auto* gr = exp_cmd->add_subcommand("growth", "proof-size growth measurements");
  gr->add_option("--family", family, "formula family")
      ->required()
      ->check(CLI::IsMember({"nested-k", "reuse-heavy"}));
  gr->add_option("--max-index", max_index, "largest family index")->check(CLI::Range(1u, 2000u));
  gr->add_option("--json", json_path, "write the machine-readable report here");
  gr->add_option("--csv", csv_path, "write the measurement table here");
  gr->callback([&] { code = emit_report(growth_report(family, max_index), json_path, csv_path); });
  auto* ss_cmd = exp_cmd->add_subcommand("semisub", "fresh-atom audit demonstration");
  ss_cmd->add_option("--json", json_path, "write the machine-readable report here");
  ss_cmd->callback([&] { code = emit_report(semi_subformula_violation_demo(), json_path, csv_path); });

  try {
    app.parse(argc, argv);
  } catch (const Bail& b) {
    return b.code;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return kIo;
  }
  return code;
}
