#include "proofbench/sc.hpp"

#include <algorithm>
#include <map>

namespace proofbench {

namespace {

struct Checker {
  const CalculusProfile& prof;
  ScCheckResult result;

  bool fail(const std::vector<int>& path, const std::string& reason) {
    result.valid = false;
    result.path = path;
    result.reason = reason;
    return false;
  }

  static bool occurs_in_sequent(const Sequent& s, const std::string& atom) {
    if (contains_atom(s.consequent, atom)) return true;
    for (Formula f : s.antecedents)
      if (contains_atom(f, atom)) return true;
    return false;
  }

  // Expected premise count per rule; axioms take none.
  static int premise_arity(RuleId r) {
    switch (r) {
      case RuleId::AxId:
      case RuleId::AxBot: return 0;
      case RuleId::GI1And:
      case RuleId::GEOr:
      case RuleId::GEImpImp: return 2;
      default: return 1;
    }
  }

  bool check_node(const ScDerivation& d, std::vector<int>& path) {
    const Sequent& s = d.conclusion;
    const RuleInst& in = d.inst;

    if (d.rule != RuleId::AxId && d.rule != RuleId::AxBot && !prof.enabled(d.rule))
      return fail(path, std::string("rule ") + rule_name(d.rule) + " is not enabled in profile " + prof.name);
    if (d.rule == RuleId::AxBot && !prof.axiom_bot)
      return fail(path, "AxBot is not an axiom of profile " + prof.name);
    if (static_cast<int>(d.premises.size()) != premise_arity(d.rule))
      return fail(path, std::string(rule_name(d.rule)) + ": wrong premise count");

    auto need = [&](const std::optional<Formula>& slot, const char* nm, Formula& out) {
      if (!slot) {
        fail(path, std::string(rule_name(d.rule)) + ": malformed instantiation, missing slot '" + nm + "'");
        return false;
      }
      out = *slot;
      return true;
    };
    auto premise_is = [&](int i, const Sequent& want) {
      if (d.premises[static_cast<size_t>(i)].conclusion == want) return true;
      return fail(path, std::string(rule_name(d.rule)) + ": premise " + std::to_string(i) +
                            " should be '" + format(want) + "', found '" +
                            format(d.premises[static_cast<size_t>(i)].conclusion) + "'");
    };
    auto has_antecedent = [&](Formula f) {
      if (s.contains(f)) return true;
      return fail(path, std::string(rule_name(d.rule)) + ": principal formula '" + format(f) +
                            "' is not an antecedent");
    };

    Formula a = s.consequent, b = s.consequent, c = s.consequent, p = s.consequent;

    switch (d.rule) {
      case RuleId::AxId: {
        if (!need(in.p, "p", p)) return false;
        if (!p.is_atomic()) return fail(path, "AxId: consequent must be atomic");
        if (s.consequent != p) return fail(path, "AxId: instantiation does not match the consequent");
        if (!s.contains(p)) return fail(path, "AxId: consequent is not among the antecedents");
        return true;
      }
      case RuleId::AxBot: {
        if (!need(in.p, "p", p)) return false;
        if (!p.is_atom()) return fail(path, "AxBot: consequent must be an atom");
        if (s.consequent != p) return fail(path, "AxBot: instantiation does not match the consequent");
        if (!s.contains(Formula::bot())) return fail(path, "AxBot: bot is not among the antecedents");
        return true;
      }
      case RuleId::GI1And: {
        if (!need(in.a, "a", a) || !need(in.b, "b", b)) return false;
        if (s.consequent != Formula::conj(a, b))
          return fail(path, "GI1&: consequent is not the instantiated conjunction");
        return premise_is(0, s.replace_consequent(a)) && premise_is(1, s.replace_consequent(b));
      }
      case RuleId::GI2And: {
        if (!need(in.a, "a", a) || !need(in.b, "b", b)) return false;
        if (s.consequent != Formula::conj(a, b))
          return fail(path, "GI2&: consequent is not the instantiated conjunction");
        if (!has_antecedent(a)) return false;
        return premise_is(0, s.replace_consequent(b));
      }
      case RuleId::GI1Or: {
        if (!need(in.a, "a", a) || !need(in.b, "b", b)) return false;
        if (s.consequent != Formula::disj(a, b))
          return fail(path, "GI1|: consequent is not the instantiated disjunction");
        return premise_is(0, s.replace_consequent(a));
      }
      case RuleId::GI2Or: {
        if (!need(in.a, "a", a) || !need(in.b, "b", b)) return false;
        if (s.consequent != Formula::disj(a, b))
          return fail(path, "GI2|: consequent is not the instantiated disjunction");
        return premise_is(0, s.replace_consequent(b));
      }
      case RuleId::GI1Imp: {
        if (!need(in.a, "a", a) || !need(in.b, "b", b)) return false;
        if (s.consequent != Formula::imp(a, b))
          return fail(path, "GI1->: consequent is not the instantiated implication");
        if (s.contains(a))
          return fail(path, "GI1->: antecedent copy of A already present, GI2-> applies instead");
        return premise_is(0, s.with(a).replace_consequent(b));
      }
      case RuleId::GI2Imp: {
        if (!need(in.a, "a", a) || !need(in.b, "b", b)) return false;
        if (s.consequent != Formula::imp(a, b))
          return fail(path, "GI2->: consequent is not the instantiated implication");
        if (!has_antecedent(a)) return false;
        return premise_is(0, s.replace_consequent(b));
      }
      case RuleId::GEAnd: {
        if (!need(in.a, "a", a) || !need(in.b, "b", b)) return false;
        Formula principal = Formula::conj(a, b);
        if (!has_antecedent(principal)) return false;
        return premise_is(0, s.without(principal).with(a, b));
      }
      case RuleId::GEOr: {
        if (!need(in.a, "a", a) || !need(in.b, "b", b)) return false;
        Formula principal = Formula::disj(a, b);
        if (!has_antecedent(principal)) return false;
        Sequent g = s.without(principal);
        return premise_is(0, g.with(a)) && premise_is(1, g.with(b));
      }
      case RuleId::GEImpP: {
        if (!need(in.p, "p", p) || !need(in.b, "b", b)) return false;
        if (!p.is_atomic()) return fail(path, "GE->P: principal antecedent must be atomic");
        Formula principal = Formula::imp(p, b);
        if (!has_antecedent(principal)) return false;
        Sequent g = s.without(principal);
        if (!g.contains(p))
          return fail(path, "GE->P: the atomic antecedent '" + format(p) + "' is not present");
        return premise_is(0, g.with(b));
      }
      case RuleId::GEImpAnd: {
        if (!need(in.a, "a", a) || !need(in.b, "b", b) || !need(in.c, "c", c)) return false;
        Formula principal = Formula::imp(Formula::conj(a, b), c);
        if (!has_antecedent(principal)) return false;
        return premise_is(0, s.without(principal).with(Formula::imp(a, Formula::imp(b, c))));
      }
      case RuleId::GEImpOr: {
        if (!need(in.a, "a", a) || !need(in.b, "b", b) || !need(in.c, "c", c) ||
            !need(in.p, "p", p))
          return false;
        Formula principal = Formula::imp(Formula::disj(a, b), c);
        if (!has_antecedent(principal)) return false;
        if (!p.is_atom()) return fail(path, "GE->|: the split variable must be an atom");
        if (occurs_in_sequent(s, p.atom_name()))
          return fail(path, "GE->|: split variable '" + p.atom_name() +
                                "' occurs in the conclusion, not fresh");
        return premise_is(0, s.without(principal)
                                 .with3(Formula::imp(a, p), Formula::imp(b, p), Formula::imp(p, c)));
      }
      case RuleId::GEImpImp: {
        if (!need(in.a, "a", a) || !need(in.b, "b", b) || !need(in.c, "c", c)) return false;
        Formula ab = Formula::imp(a, b);
        Formula principal = Formula::imp(ab, c);
        if (!has_antecedent(principal)) return false;
        Sequent g = s.without(principal);
        return premise_is(0, g.with(Formula::imp(b, c)).replace_consequent(ab)) &&
               premise_is(1, g.with(c));
      }
    }
    return fail(path, "unknown rule");
  }

  bool walk(const ScDerivation& d, std::vector<int>& path) {
    if (!check_node(d, path)) return false;
    for (size_t i = 0; i < d.premises.size(); ++i) {
      path.push_back(static_cast<int>(i));
      if (!walk(d.premises[i], path)) return false;
      path.pop_back();
    }
    return true;
  }
};

} // namespace

ScCheckResult check_sc(const ScDerivation& d, const CalculusProfile& prof) {
  Checker ck{prof, {}};
  std::vector<int> path;
  if (ck.walk(d, path)) return ScCheckResult{true, {}, ""};
  return ck.result;
}

namespace {

void metrics_walk(const ScDerivation& d, uint32_t depth, ScMetrics& m, FormulaSet& fs) {
  m.size += 1;
  m.height = std::max(m.height, depth);
  fs.insert(d.conclusion.consequent);
  for (Formula f : d.conclusion.antecedents) fs.insert(f);
  for (const ScDerivation& p : d.premises) metrics_walk(p, depth + 1, m, fs);
}

} // namespace

ScMetrics sc_metrics(const ScDerivation& d) {
  ScMetrics m;
  FormulaSet fs;
  metrics_walk(d, 0, m, fs);
  m.foundation = static_cast<uint32_t>(fs.size());
  return m;
}

FormulaSet sc_occurring_formulas(const ScDerivation& d) {
  FormulaSet fs;
  ScMetrics m;
  metrics_walk(d, 0, m, fs);
  return fs;
}

namespace {

void audit_walk(const ScDerivation& d, const FormulaSet& allowed, std::vector<int>& path,
                std::map<Formula, std::vector<int>, FormulaLess>& bad) {
  for (Formula f : sequent_members(d.conclusion))
    if (!allowed.count(f) && !bad.count(f)) bad.emplace(f, path);
  for (size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(static_cast<int>(i));
    audit_walk(d.premises[i], allowed, path, bad);
    path.pop_back();
  }
}

} // namespace

AuditResult semi_subformula_audit(const ScDerivation& d, Formula rho) {
  if (d.conclusion.consequent != rho)
    throw std::invalid_argument("semi_subformula_audit: derivation does not conclude the given formula");
  FormulaSet allowed = semi_subformulas(rho);
  // antecedents of the root are granted too, so audits of sequents G => rho
  // measure the rule machinery rather than the chosen hypotheses
  for (Formula f : d.conclusion.antecedents)
    for (Formula g : semi_subformulas(f)) allowed.insert(g);
  std::map<Formula, std::vector<int>, FormulaLess> bad;
  std::vector<int> path;
  audit_walk(d, allowed, path, bad);
  AuditResult r;
  r.holds = bad.empty();
  for (auto& [f, p] : bad) r.violations.push_back(AuditViolation{f, p});
  return r;
}

GeImpOrStep apply_ge_imp_or(const Sequent& target) {
  for (Formula f : target.antecedents) {
    if (!(f.is_imp() && f.lhs().kind() == Conn::Or)) continue;
    Formula a = f.lhs().lhs(), b = f.lhs().rhs(), c = f.rhs();
    std::vector<Formula> ctx = target.antecedents;
    ctx.push_back(target.consequent);
    Formula p = Formula::atom(next_fresh_atom(ctx));
    GeImpOrStep step;
    step.inst.a = a;
    step.inst.b = b;
    step.inst.c = c;
    step.inst.p = p;
    step.premises.push_back(
        target.without(f).with3(Formula::imp(a, p), Formula::imp(b, p), Formula::imp(p, c)));
    return step;
  }
  throw std::invalid_argument("apply_ge_imp_or: no antecedent of shape (A|B)->C");
}

// --- serialization -------------------------------------------------------

nlohmann::json sequent_to_json(const Sequent& s) {
  nlohmann::json ants = nlohmann::json::array();
  for (Formula f : s.antecedents) ants.push_back(format(f));
  return nlohmann::json{{"antecedents", std::move(ants)}, {"consequent", format(s.consequent)}};
}

Sequent sequent_from_json(const nlohmann::json& j) {
  try {
    if (!j.at("antecedents").is_array())
      throw std::invalid_argument("antecedents must be an array");
    std::vector<Formula> ants;
    for (const auto& e : j.at("antecedents")) ants.push_back(parse_formula(e.get<std::string>()));
    return Sequent{std::move(ants), parse_formula(j.at("consequent").get<std::string>())};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad sequent record: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("bad sequent record: ") + e.what());
  }
}

nlohmann::json sc_to_json(const ScDerivation& d) {
  nlohmann::json inst = nlohmann::json::object();
  if (d.inst.a) inst["a"] = format(*d.inst.a);
  if (d.inst.b) inst["b"] = format(*d.inst.b);
  if (d.inst.c) inst["c"] = format(*d.inst.c);
  if (d.inst.p) inst["p"] = format(*d.inst.p);
  nlohmann::json prems = nlohmann::json::array();
  for (const ScDerivation& p : d.premises) prems.push_back(sc_to_json(p));
  return nlohmann::json{{"conclusion", sequent_to_json(d.conclusion)},
                        {"rule", rule_name(d.rule)},
                        {"instantiation", std::move(inst)},
                        {"premises", std::move(prems)}};
}

ScDerivation sc_from_json(const nlohmann::json& j) {
  try {
    Sequent conc = sequent_from_json(j.at("conclusion"));
    auto rn = j.at("rule").get<std::string>();
    auto rule = rule_from_name(rn);
    if (!rule) throw std::invalid_argument("unknown rule id '" + rn + "'");
    RuleInst inst;
    const auto& ji = j.at("instantiation");
    if (ji.contains("a")) inst.a = parse_formula(ji["a"].get<std::string>());
    if (ji.contains("b")) inst.b = parse_formula(ji["b"].get<std::string>());
    if (ji.contains("c")) inst.c = parse_formula(ji["c"].get<std::string>());
    if (ji.contains("p")) inst.p = parse_formula(ji["p"].get<std::string>());
    std::vector<ScDerivation> prems;
    for (const auto& e : j.at("premises")) prems.push_back(sc_from_json(e));
    return ScDerivation{std::move(conc), *rule, std::move(inst), std::move(prems)};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad derivation record: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("bad derivation record: ") + e.what());
  }
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace proofbench
