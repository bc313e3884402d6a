#include "proofbench/translate.hpp"

namespace proofbench {

namespace {

struct Translator {
  bool rep;
  uint32_t next_label = 1;

  NdDerivation plug(const NdDerivation& d, Formula hole, const NdDerivation& repl) {
    return nd_plug_open(d, hole, repl, next_label, rep);
  }

  NdDerivation go(const ScDerivation& d) {
    const RuleInst& in = d.inst;
    Formula goal = d.conclusion.consequent;
    switch (d.rule) {
      case RuleId::AxId: return nd_assume(goal);
      case RuleId::AxBot:
        throw std::invalid_argument(
            "translate: AxBot step has no counterpart in the minimal-logic targets");

      case RuleId::GI1Imp:
      case RuleId::GI2Imp: {
        NdDerivation t = go(d.premises[0]);
        uint32_t l = next_label++;
        nd_mark_open(t, in.a.value(), l);
        return NdDerivation(NdRule::ImpI, goal, {std::move(t)}, l);
      }
      case RuleId::GI1And:
        return NdDerivation(NdRule::AndI, goal, {go(d.premises[0]), go(d.premises[1])});
      case RuleId::GI2And:
        return NdDerivation(NdRule::AndI, goal, {nd_assume(in.a.value()), go(d.premises[0])});
      case RuleId::GI1Or: return NdDerivation(NdRule::OrI1, goal, {go(d.premises[0])});
      case RuleId::GI2Or: return NdDerivation(NdRule::OrI2, goal, {go(d.premises[0])});

      case RuleId::GEAnd: {
        Formula a = in.a.value(), b = in.b.value();
        Formula principal = Formula::conj(a, b);
        NdDerivation t = go(d.premises[0]);
        t = plug(t, a, NdDerivation(NdRule::AndE1, a, {nd_assume(principal)}));
        t = plug(t, b, NdDerivation(NdRule::AndE2, b, {nd_assume(principal)}));
        return t;
      }
      case RuleId::GEOr: {
        Formula a = in.a.value(), b = in.b.value();
        NdDerivation t1 = go(d.premises[0]);
        NdDerivation t2 = go(d.premises[1]);
        uint32_t l = next_label++;
        nd_mark_open(t1, a, l);
        nd_mark_open(t2, b, l);
        return NdDerivation(NdRule::OrE, goal,
                            {nd_assume(Formula::disj(a, b)), std::move(t1), std::move(t2)}, l);
      }
      case RuleId::GEImpP: {
        Formula p = in.p.value(), b = in.b.value();
        NdDerivation t = go(d.premises[0]);
        NdDerivation use(NdRule::ImpE, b, {nd_assume(p), nd_assume(Formula::imp(p, b))});
        return plug(t, b, use);
      }
      case RuleId::GEImpAnd: {
        Formula a = in.a.value(), b = in.b.value(), c = in.c.value();
        Formula principal = Formula::imp(Formula::conj(a, b), c);
        Formula curried = Formula::imp(a, Formula::imp(b, c));
        NdDerivation t = go(d.premises[0]);
        uint32_t la = next_label++;
        uint32_t lb = next_label++;
        NdDerivation leaf_a = nd_assume(a);
        leaf_a.mark = la;
        NdDerivation leaf_b = nd_assume(b);
        leaf_b.mark = lb;
        NdDerivation pair(NdRule::AndI, Formula::conj(a, b),
                          {std::move(leaf_a), std::move(leaf_b)});
        NdDerivation applied(NdRule::ImpE, c, {std::move(pair), nd_assume(principal)});
        NdDerivation inner(NdRule::ImpI, Formula::imp(b, c), {std::move(applied)}, lb);
        NdDerivation curry(NdRule::ImpI, curried, {std::move(inner)}, la);
        return plug(t, curried, curry);
      }
      case RuleId::GEImpOr: {
        Formula a = in.a.value(), b = in.b.value();
        Formula p = in.p.value();
        Formula disj = Formula::disj(a, b);
        NdDerivation t = go(d.premises[0]);
        // the fresh split atom stood for A|B all along
        t = nd_substitute_atom(t, p.atom_name(), disj);
        uint32_t la = next_label++;
        NdDerivation leaf_a = nd_assume(a);
        leaf_a.mark = la;
        NdDerivation inj1(NdRule::OrI1, disj, {std::move(leaf_a)});
        NdDerivation from_a(NdRule::ImpI, Formula::imp(a, disj), {std::move(inj1)}, la);
        uint32_t lb = next_label++;
        NdDerivation leaf_b = nd_assume(b);
        leaf_b.mark = lb;
        NdDerivation inj2(NdRule::OrI2, disj, {std::move(leaf_b)});
        NdDerivation from_b(NdRule::ImpI, Formula::imp(b, disj), {std::move(inj2)}, lb);
        t = plug(t, Formula::imp(a, disj), from_a);
        t = plug(t, Formula::imp(b, disj), from_b);
        return t;
      }
      case RuleId::GEImpImp: {
        Formula a = in.a.value(), b = in.b.value(), c = in.c.value();
        Formula ab = Formula::imp(a, b);
        Formula principal = Formula::imp(ab, c);
        Formula bc = Formula::imp(b, c);
        NdDerivation t1 = go(d.premises[0]);
        NdDerivation t2 = go(d.premises[1]);
        uint32_t lb = next_label++;
        uint32_t la = next_label++;
        NdDerivation leaf_b = nd_assume(b);
        leaf_b.mark = lb;
        NdDerivation weaken(NdRule::ImpI, ab, {std::move(leaf_b)}, la); // vacuous
        NdDerivation applied(NdRule::ImpE, c, {std::move(weaken), nd_assume(principal)});
        NdDerivation d_bc(NdRule::ImpI, bc, {std::move(applied)}, lb);
        NdDerivation t1p = plug(t1, bc, d_bc);
        NdDerivation c_deriv(NdRule::ImpE, c, {std::move(t1p), nd_assume(principal)});
        return plug(t2, c, c_deriv);
      }
    }
    throw std::invalid_argument("translate: unknown rule");
  }
};

} // namespace

NdDerivation translate_sc_to_nd(const ScDerivation& d, const NdProfile& target) {
  Translator tr{target.allow_rep};
  return nd_canonical_labels(tr.go(d));
}

} // namespace proofbench
