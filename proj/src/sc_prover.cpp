#include "proofbench/sc_prover.hpp"

#include <algorithm>
#include <limits>

namespace proofbench {

namespace {

RuleInst inst_p(Formula p) {
  RuleInst i;
  i.p = p;
  return i;
}
RuleInst inst_ab(Formula a, Formula b) {
  RuleInst i;
  i.a = a;
  i.b = b;
  return i;
}
RuleInst inst_pb(Formula p, Formula b) {
  RuleInst i;
  i.p = p;
  i.b = b;
  return i;
}
RuleInst inst_abc(Formula a, Formula b, Formula c) {
  RuleInst i;
  i.a = a;
  i.b = b;
  i.c = c;
  return i;
}

struct Search {
  const CalculusProfile& prof;
  uint32_t depth_cap = 0;
  uint64_t nodes = 0;
  bool exhausted = false;

  bool enabled(RuleId r) const { return prof.enabled(r); }

  // Backward search. Invertible rules are applied eagerly and their failure
  // fails the node; only GI|1/GI|2 and GE->-> are backtracking choice points.
  std::optional<ScDerivation> attempt(const Sequent& s, uint32_t depth) {
    ++nodes;
    Formula goal = s.consequent;

    if (goal.is_atomic() && s.contains(goal))
      return ScDerivation{s, RuleId::AxId, inst_p(goal), {}};
    if (prof.axiom_bot && goal.is_atom() && s.contains(Formula::bot()))
      return ScDerivation{s, RuleId::AxBot, inst_p(goal), {}};

    if (depth >= depth_cap) {
      exhausted = true;
      return std::nullopt;
    }

    auto close1 = [&](RuleId r, RuleInst in, const Sequent& prem) -> std::optional<ScDerivation> {
      auto sub = attempt(prem, depth + 1);
      if (!sub) return std::nullopt;
      return ScDerivation{s, r, std::move(in), {std::move(*sub)}};
    };
    auto close2 = [&](RuleId r, RuleInst in, const Sequent& p1,
                      const Sequent& p2) -> std::optional<ScDerivation> {
      auto s1 = attempt(p1, depth + 1);
      if (!s1) return std::nullopt;
      auto s2 = attempt(p2, depth + 1);
      if (!s2) return std::nullopt;
      return ScDerivation{s, r, std::move(in), {std::move(*s1), std::move(*s2)}};
    };

    if (goal.is_imp()) {
      Formula a = goal.lhs(), b = goal.rhs();
      if (s.contains(a) && enabled(RuleId::GI2Imp))
        return close1(RuleId::GI2Imp, inst_ab(a, b), s.replace_consequent(b));
      if (!s.contains(a) && enabled(RuleId::GI1Imp))
        return close1(RuleId::GI1Imp, inst_ab(a, b), s.with(a).replace_consequent(b));
      return std::nullopt;
    }

    // single-premise invertible left rules, first match in antecedent order
    if (enabled(RuleId::GEAnd)) {
      for (Formula f : s.antecedents)
        if (f.kind() == Conn::And)
          return close1(RuleId::GEAnd, inst_ab(f.lhs(), f.rhs()),
                        s.without(f).with(f.lhs(), f.rhs()));
    }
    if (enabled(RuleId::GEImpAnd)) {
      for (Formula f : s.antecedents)
        if (f.is_imp() && f.lhs().kind() == Conn::And) {
          Formula a = f.lhs().lhs(), b = f.lhs().rhs(), c = f.rhs();
          return close1(RuleId::GEImpAnd, inst_abc(a, b, c),
                        s.without(f).with(Formula::imp(a, Formula::imp(b, c))));
        }
    }
    if (enabled(RuleId::GEImpOr)) {
      for (Formula f : s.antecedents)
        if (f.is_imp() && f.lhs().kind() == Conn::Or) {
          GeImpOrStep st = apply_ge_imp_or(s);
          return close1(RuleId::GEImpOr, st.inst, st.premises[0]);
        }
    }
    if (enabled(RuleId::GEImpP)) {
      for (Formula f : s.antecedents)
        if (f.is_imp() && f.lhs().is_atomic() && s.contains(f.lhs()))
          return close1(RuleId::GEImpP, inst_pb(f.lhs(), f.rhs()), s.without(f).with(f.rhs()));
    }

    // branching invertible rules
    if (goal.kind() == Conn::And) {
      Formula a = goal.lhs(), b = goal.rhs();
      if (enabled(RuleId::GI2And) && s.contains(a))
        return close1(RuleId::GI2And, inst_ab(a, b), s.replace_consequent(b));
      if (enabled(RuleId::GI1And))
        return close2(RuleId::GI1And, inst_ab(a, b), s.replace_consequent(a),
                      s.replace_consequent(b));
      return std::nullopt;
    }
    if (enabled(RuleId::GEOr)) {
      for (Formula f : s.antecedents)
        if (f.kind() == Conn::Or) {
          Sequent g = s.without(f);
          return close2(RuleId::GEOr, inst_ab(f.lhs(), f.rhs()), g.with(f.lhs()), g.with(f.rhs()));
        }
    }

    // choice points; disjunct picks first, smaller one ahead
    if (goal.kind() == Conn::Or) {
      struct OrCand {
        RuleId rule;
        Formula pick;
      };
      std::vector<OrCand> cands;
      if (enabled(RuleId::GI1Or)) cands.push_back({RuleId::GI1Or, goal.lhs()});
      if (enabled(RuleId::GI2Or)) cands.push_back({RuleId::GI2Or, goal.rhs()});
      std::stable_sort(cands.begin(), cands.end(),
                       [](const OrCand& x, const OrCand& y) { return x.pick.length() < y.pick.length(); });
      for (const OrCand& cd : cands)
        if (auto r = close1(cd.rule, inst_ab(goal.lhs(), goal.rhs()), s.replace_consequent(cd.pick)))
          return r;
    }
    if (enabled(RuleId::GEImpImp)) {
      std::vector<Formula> cands;
      for (Formula f : s.antecedents) {
        if (!(f.is_imp() && f.lhs().is_imp())) continue;
        if (!cands.empty() && cands.back() == f) continue; // extra copies change nothing
        cands.push_back(f);
      }
      // smaller principal first; ties keep the structural scan order
      std::stable_sort(cands.begin(), cands.end(),
                       [](Formula x, Formula y) { return x.length() < y.length(); });
      for (Formula f : cands) {
        Formula a = f.lhs().lhs(), b = f.lhs().rhs(), c = f.rhs();
        Sequent g = s.without(f);
        if (auto r = close2(RuleId::GEImpImp, inst_abc(a, b, c),
                            g.with(Formula::imp(b, c)).replace_consequent(f.lhs()), g.with(c)))
          return r;
      }
    }
    return std::nullopt;
  }
};

} // namespace

ProveResult prove_sc(const Sequent& goal, const CalculusProfile& prof, uint32_t budget_multiplier) {
  Search srch{prof};
  srch.depth_cap = prof.depth_budgeted
                       ? budget_multiplier * static_cast<uint32_t>(sequent_length(goal))
                       : std::numeric_limits<uint32_t>::max();
  ProveResult r;
  auto d = srch.attempt(goal, 0);
  r.nodes_expanded = srch.nodes;
  if (d) {
    r.status = ProveStatus::Proved;
    r.derivation = std::move(*d);
  } else {
    r.status = srch.exhausted ? ProveStatus::BudgetExhausted : ProveStatus::Unprovable;
  }
  return r;
}

} // namespace proofbench
