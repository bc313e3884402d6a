#include "proofbench/nd.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace proofbench {

const char* nd_rule_name(NdRule r) {
  switch (r) {
    case NdRule::AndI: return "&I";
    case NdRule::AndE1: return "&E1";
    case NdRule::AndE2: return "&E2";
    case NdRule::OrI1: return "|I1";
    case NdRule::OrI2: return "|I2";
    case NdRule::OrE: return "|E";
    case NdRule::ImpI: return "->I";
    case NdRule::ImpE: return "->E";
    case NdRule::BotI: return "botI";
    case NdRule::Rep: return "Rep";
  }
  return "?";
}

std::optional<NdRule> nd_rule_from_name(std::string_view name) {
  static const std::pair<std::string_view, NdRule> table[] = {
      {"&I", NdRule::AndI},   {"&E1", NdRule::AndE1}, {"&E2", NdRule::AndE2},
      {"|I1", NdRule::OrI1},  {"|I2", NdRule::OrI2},  {"|E", NdRule::OrE},
      {"->I", NdRule::ImpI},  {"->E", NdRule::ImpE},  {"botI", NdRule::BotI},
      {"Rep", NdRule::Rep},
  };
  for (auto& [n, r] : table)
    if (n == name) return r;
  return std::nullopt;
}

const NdProfile& NdProfile::nm_full() {
  static const NdProfile p{"nm-full", true, false, false};
  return p;
}
const NdProfile& NdProfile::nm_int() {
  static const NdProfile p{"nm-int", true, true, false};
  return p;
}
const NdProfile& NdProfile::nm_imp() {
  static const NdProfile p{"nm-imp", false, false, true};
  return p;
}
const NdProfile* NdProfile::by_name(std::string_view name) {
  if (name == "nm-full") return &nm_full();
  if (name == "nm-int") return &nm_int();
  if (name == "nm-imp") return &nm_imp();
  return nullptr;
}

bool implicational_only(Formula f) {
  switch (f.kind()) {
    case Conn::Atom:
    case Conn::Bot: return true;
    case Conn::Imp: return implicational_only(f.lhs()) && implicational_only(f.rhs());
    case Conn::And:
    case Conn::Or: return false;
  }
  return false;
}

bool nd_rule_allowed(const NdProfile& prof, NdRule r) {
  switch (r) {
    case NdRule::AndI:
    case NdRule::AndE1:
    case NdRule::AndE2:
    case NdRule::OrI1:
    case NdRule::OrI2:
    case NdRule::OrE: return prof.allow_and_or;
    case NdRule::BotI: return prof.allow_bot_i;
    case NdRule::Rep: return prof.allow_rep;
    case NdRule::ImpI:
    case NdRule::ImpE: return true;
  }
  return false;
}

namespace {

struct NdChecker {
  const NdProfile& prof;
  NdCheckResult result;
  std::set<uint32_t> labels_seen;
  std::vector<std::pair<uint32_t, Formula>> scope; // (label, dischargeable formula)

  bool fail(const std::vector<int>& path, std::string reason) {
    result.valid = false;
    result.path = path;
    result.reason = std::move(reason);
    return false;
  }

  bool walk(const NdDerivation& d, std::vector<int>& path) {
    if (!prof.allow_and_or && !implicational_only(d.formula))
      return fail(path, "profile " + prof.name + " admits implicational formulas only, found '" +
                            format(d.formula) + "'");

    if (d.kind == NdKind::Assumption) {
      if (!d.children.empty()) return fail(path, "assumption with children");
      if (d.label) return fail(path, "assumption carrying a discharge label");
      if (d.mark) {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it)
          if (it->first == *d.mark) {
            if (it->second != d.formula)
              return fail(path, "mark " + std::to_string(*d.mark) + " discharges '" +
                                    format(it->second) + "', leaf reads '" + format(d.formula) + "'");
            return true;
          }
        return fail(path, "mark " + std::to_string(*d.mark) + " resolves to no enclosing discharger");
      }
      return true;
    }

    const char* rn = nd_rule_name(d.rule);
    if (!nd_rule_allowed(prof, d.rule))
      return fail(path, std::string(rn) + " is not part of profile " + prof.name);
    if (d.mark) return fail(path, "inference carrying an assumption mark");

    bool discharging = d.rule == NdRule::ImpI || d.rule == NdRule::OrE;
    if (discharging && !d.label) return fail(path, std::string(rn) + ": discharge label required");
    if (!discharging && d.label) return fail(path, std::string(rn) + ": unexpected discharge label");
    if (d.label && !labels_seen.insert(*d.label).second)
      return fail(path, "duplicate discharge label " + std::to_string(*d.label));

    auto arity = [&](size_t n) {
      if (d.children.size() == n) return true;
      return fail(path, std::string(rn) + ": expected " + std::to_string(n) + " premises, found " +
                            std::to_string(d.children.size()));
    };
    auto shape = [&](bool ok, const char* what) {
      if (ok) return true;
      return fail(path, std::string(rn) + ": " + what);
    };

    Formula f = d.formula;
    switch (d.rule) {
      case NdRule::AndI:
        if (!arity(2)) return false;
        if (!shape(f.kind() == Conn::And && f.lhs() == d.children[0].formula &&
                       f.rhs() == d.children[1].formula,
                   "conclusion is not the conjunction of the premises"))
          return false;
        break;
      case NdRule::AndE1:
        if (!arity(1)) return false;
        if (!shape(d.children[0].formula.kind() == Conn::And &&
                       d.children[0].formula.lhs() == f,
                   "premise is not a conjunction with this left part"))
          return false;
        break;
      case NdRule::AndE2:
        if (!arity(1)) return false;
        if (!shape(d.children[0].formula.kind() == Conn::And &&
                       d.children[0].formula.rhs() == f,
                   "premise is not a conjunction with this right part"))
          return false;
        break;
      case NdRule::OrI1:
        if (!arity(1)) return false;
        if (!shape(f.kind() == Conn::Or && f.lhs() == d.children[0].formula,
                   "conclusion does not extend the premise on the left"))
          return false;
        break;
      case NdRule::OrI2:
        if (!arity(1)) return false;
        if (!shape(f.kind() == Conn::Or && f.rhs() == d.children[0].formula,
                   "conclusion does not extend the premise on the right"))
          return false;
        break;
      case NdRule::OrE:
        if (!arity(3)) return false;
        if (!shape(d.children[0].formula.kind() == Conn::Or, "first premise is not a disjunction"))
          return false;
        if (!shape(d.children[1].formula == f && d.children[2].formula == f,
                   "case premises do not both conclude the conclusion"))
          return false;
        break;
      case NdRule::ImpI:
        if (!arity(1)) return false;
        if (!shape(f.is_imp() && f.rhs() == d.children[0].formula,
                   "conclusion is not an implication ending in the premise"))
          return false;
        break;
      case NdRule::ImpE:
        if (!arity(2)) return false;
        if (!shape(d.children[1].formula.is_imp() &&
                       d.children[1].formula.lhs() == d.children[0].formula &&
                       d.children[1].formula.rhs() == f,
                   "premises are not a matching argument/implication pair"))
          return false;
        break;
      case NdRule::BotI:
        if (!arity(1)) return false;
        if (!shape(d.children[0].formula.is_bot(), "premise is not bot")) return false;
        break;
      case NdRule::Rep:
        if (!arity(1)) return false;
        if (!shape(d.children[0].formula == f, "premise differs from conclusion")) return false;
        break;
    }

    for (size_t i = 0; i < d.children.size(); ++i) {
      bool pushed = false;
      if (d.rule == NdRule::ImpI && i == 0) {
        scope.emplace_back(*d.label, f.lhs());
        pushed = true;
      } else if (d.rule == NdRule::OrE && (i == 1 || i == 2)) {
        Formula disj = d.children[0].formula;
        scope.emplace_back(*d.label, i == 1 ? disj.lhs() : disj.rhs());
        pushed = true;
      }
      path.push_back(static_cast<int>(i));
      bool ok = walk(d.children[i], path);
      path.pop_back();
      if (pushed) scope.pop_back();
      if (!ok) return false;
    }
    return true;
  }
};

} // namespace

NdCheckResult check_nd(const NdDerivation& d, const NdProfile& prof) {
  NdChecker ck{prof, {}, {}, {}};
  std::vector<int> path;
  if (ck.walk(d, path)) return NdCheckResult{true, {}, ""};
  return ck.result;
}

namespace {

void nd_metrics_walk(const NdDerivation& d, uint32_t depth, NdMetrics& m, FormulaSet& fs) {
  m.size += 1;
  m.height = std::max(m.height, depth);
  fs.insert(d.formula);
  for (const NdDerivation& c : d.children) nd_metrics_walk(c, depth + 1, m, fs);
}

} // namespace

NdMetrics nd_metrics(const NdDerivation& d) {
  NdMetrics m;
  FormulaSet fs;
  nd_metrics_walk(d, 0, m, fs);
  m.foundation = static_cast<uint32_t>(fs.size());
  return m;
}

FormulaSet nd_open_assumptions(const NdDerivation& d) {
  FormulaSet fs;
  std::vector<const NdDerivation*> stack{&d};
  while (!stack.empty()) {
    const NdDerivation* n = stack.back();
    stack.pop_back();
    if (n->kind == NdKind::Assumption && !n->mark) fs.insert(n->formula);
    for (const NdDerivation& c : n->children) stack.push_back(&c);
  }
  return fs;
}

uint32_t nd_max_label(const NdDerivation& d) {
  uint32_t m = 0;
  if (d.label) m = *d.label;
  if (d.mark) m = std::max(m, *d.mark);
  for (const NdDerivation& c : d.children) m = std::max(m, nd_max_label(c));
  return m;
}

namespace {

void collect_postorder_labels(const NdDerivation& d, std::map<uint32_t, uint32_t>& remap,
                              uint32_t& next) {
  for (const NdDerivation& c : d.children) collect_postorder_labels(c, remap, next);
  if (d.label) remap.emplace(*d.label, next++);
}

NdDerivation apply_remap(const NdDerivation& d, const std::map<uint32_t, uint32_t>& remap) {
  NdDerivation out = d;
  out.children.clear();
  if (out.label) {
    auto it = remap.find(*out.label);
    if (it != remap.end()) out.label = it->second;
  }
  if (out.mark) {
    auto it = remap.find(*out.mark);
    if (it != remap.end()) out.mark = it->second;
  }
  for (const NdDerivation& c : d.children) out.children.push_back(apply_remap(c, remap));
  return out;
}

} // namespace

NdDerivation nd_canonical_labels(const NdDerivation& d) {
  std::map<uint32_t, uint32_t> remap;
  uint32_t next = 1;
  collect_postorder_labels(d, remap, next);
  return apply_remap(d, remap);
}

void nd_mark_open(NdDerivation& d, Formula assumption, uint32_t label) {
  if (d.kind == NdKind::Assumption) {
    if (!d.mark && d.formula == assumption) d.mark = label;
    return;
  }
  for (NdDerivation& c : d.children) nd_mark_open(c, assumption, label);
}

namespace {

NdDerivation refresh_labels(const NdDerivation& d, uint32_t& next_label) {
  std::map<uint32_t, uint32_t> remap;
  collect_postorder_labels(d, remap, next_label);
  return apply_remap(d, remap);
}

} // namespace

NdDerivation nd_plug_open(const NdDerivation& d, Formula hole, const NdDerivation& plug,
                          uint32_t& next_label, bool rep_wrap) {
  if (d.kind == NdKind::Assumption) {
    if (!d.mark && d.formula == hole) {
      NdDerivation grafted = refresh_labels(plug, next_label);
      if (rep_wrap) return NdDerivation(NdRule::Rep, hole, {std::move(grafted)});
      return grafted;
    }
    return d;
  }
  NdDerivation out = d;
  out.children.clear();
  for (const NdDerivation& c : d.children)
    out.children.push_back(nd_plug_open(c, hole, plug, next_label, rep_wrap));
  return out;
}

namespace {

Formula formula_substitute_atom(Formula f, const std::string& name, Formula repl) {
  switch (f.kind()) {
    case Conn::Atom: return f.atom_name() == name ? repl : f;
    case Conn::Bot: return f;
    case Conn::Imp:
      return Formula::imp(formula_substitute_atom(f.lhs(), name, repl),
                          formula_substitute_atom(f.rhs(), name, repl));
    case Conn::And:
      return Formula::conj(formula_substitute_atom(f.lhs(), name, repl),
                           formula_substitute_atom(f.rhs(), name, repl));
    case Conn::Or:
      return Formula::disj(formula_substitute_atom(f.lhs(), name, repl),
                           formula_substitute_atom(f.rhs(), name, repl));
  }
  return f;
}

} // namespace

NdDerivation nd_substitute_atom(const NdDerivation& d, const std::string& name, Formula repl) {
  NdDerivation out = d;
  out.formula = formula_substitute_atom(d.formula, name, repl);
  out.children.clear();
  for (const NdDerivation& c : d.children)
    out.children.push_back(nd_substitute_atom(c, name, repl));
  return out;
}

nlohmann::json nd_to_json(const NdDerivation& d) {
  nlohmann::json j;
  j["formula"] = format(d.formula);
  if (d.kind == NdKind::Assumption) {
    j["kind"] = "assumption";
    if (d.mark) j["label"] = *d.mark;
    return j;
  }
  j["kind"] = "inference";
  j["rule"] = nd_rule_name(d.rule);
  if (d.label) j["label"] = *d.label;
  nlohmann::json kids = nlohmann::json::array();
  for (const NdDerivation& c : d.children) kids.push_back(nd_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

NdDerivation nd_from_json(const nlohmann::json& j) {
  try {
    Formula f = parse_formula(j.at("formula").get<std::string>());
    auto kind = j.at("kind").get<std::string>();
    if (kind == "assumption") {
      if (j.contains("rule") || j.contains("children"))
        throw std::invalid_argument("assumption node with rule or children");
      NdDerivation d = nd_assume(f);
      if (j.contains("label")) d.mark = j["label"].get<uint32_t>();
      return d;
    }
    if (kind != "inference") throw std::invalid_argument("unknown node kind '" + kind + "'");
    auto rn = j.at("rule").get<std::string>();
    auto rule = nd_rule_from_name(rn);
    if (!rule) throw std::invalid_argument("unknown rule id '" + rn + "'");
    std::vector<NdDerivation> kids;
    for (const auto& e : j.at("children")) kids.push_back(nd_from_json(e));
    NdDerivation d(*rule, f, std::move(kids));
    if (j.contains("label")) d.label = j["label"].get<uint32_t>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad deduction record: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("bad deduction record: ") + e.what());
  }
}

} // namespace proofbench
