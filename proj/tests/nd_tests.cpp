#include <doctest.h>

#include "proofbench/nd.hpp"

using namespace proofbench;

namespace {
Formula F(const char* s) { return parse_formula(s); }

// (r&s) -> (q -> (p -> ((p&q)&r))), discharges numbered 1,2,3 on the page
NdDerivation conj_nesting() {
  NdDerivation lp = nd_assume(F("p"));
  lp.mark = 1;
  NdDerivation lq = nd_assume(F("q"));
  lq.mark = 2;
  NdDerivation lrs = nd_assume(F("r & s"));
  lrs.mark = 3;
  NdDerivation pq(NdRule::AndI, F("p & q"), {lp, lq});
  NdDerivation r(NdRule::AndE1, F("r"), {lrs});
  NdDerivation pqr(NdRule::AndI, F("(p & q) & r"), {pq, r});
  NdDerivation i1(NdRule::ImpI, F("p -> (p & q) & r"), {pqr}, 1);
  NdDerivation i2(NdRule::ImpI, F("q -> p -> (p & q) & r"), {i1}, 2);
  return NdDerivation(NdRule::ImpI, F("(r & s) -> q -> p -> (p & q) & r"), {i2}, 3);
}

// (p&q)&r from open assumptions p, q and r&s
NdDerivation conj_from_open() {
  NdDerivation pq(NdRule::AndI, F("p & q"), {nd_assume(F("p")), nd_assume(F("q"))});
  NdDerivation r(NdRule::AndE1, F("r"), {nd_assume(F("r & s"))});
  return NdDerivation(NdRule::AndI, F("(p & q) & r"), {pq, r});
}

NdDerivation and_elim() {
  NdDerivation leaf = nd_assume(F("p & q"));
  leaf.mark = 1;
  NdDerivation proj(NdRule::AndE1, F("p"), {leaf});
  return NdDerivation(NdRule::ImpI, F("(p & q) -> p"), {proj}, 1);
}
} // namespace

TEST_CASE("nested discharge example checks under the full profile") {
  NdDerivation d = conj_nesting();
  NdCheckResult c = check_nd(d, NdProfile::nm_full());
  CHECK(c.valid);
  NdMetrics m = nd_metrics(d);
  CHECK(m.size == 9);
  CHECK(m.height == 5);
  CHECK(nd_open_assumptions(d).empty());
  CHECK(nd_canonical_labels(d) == d); // page numbering is already canonical
}

TEST_CASE("open-assumption example reports its leaves") {
  NdDerivation d = conj_from_open();
  CHECK(check_nd(d, NdProfile::nm_full()).valid);
  CHECK(nd_metrics(d).size == 6);
  FormulaSet open = nd_open_assumptions(d);
  CHECK(open.size() == 3);
  CHECK(open.count(F("p")) == 1);
  CHECK(open.count(F("q")) == 1);
  CHECK(open.count(F("r & s")) == 1);
}

TEST_CASE("projection deduction metrics") {
  NdDerivation d = and_elim();
  CHECK(check_nd(d, NdProfile::nm_full()).valid);
  NdMetrics m = nd_metrics(d);
  CHECK(m.size == 3);
  CHECK(m.height == 2);
  CHECK(m.foundation == 3);
}

TEST_CASE("discharge must resolve to an ancestor with the right formula") {
  // mark 7 never bound by any ->I
  NdDerivation stray = nd_assume(F("p"));
  stray.mark = 7;
  NdDerivation bad(NdRule::ImpI, F("q -> p"), {stray}, 1);
  CHECK(!check_nd(bad, NdProfile::nm_full()).valid);

  // label 1 discharges q, but the marked leaf says p
  NdDerivation leaf = nd_assume(F("p"));
  leaf.mark = 1;
  NdDerivation bad2(NdRule::ImpI, F("q -> p"), {leaf}, 1);
  NdCheckResult c2 = check_nd(bad2, NdProfile::nm_full());
  CHECK(!c2.valid);
  CHECK(c2.path == std::vector<int>{0});
}

TEST_CASE("vacuous discharge is allowed") {
  NdDerivation d(NdRule::ImpI, F("q -> p"), {nd_assume(F("p"))}, 1);
  CHECK(check_nd(d, NdProfile::nm_full()).valid);
  CHECK(nd_open_assumptions(d) == FormulaSet{F("p")});
}

TEST_CASE("labels must be unique along the tree") {
  NdDerivation leaf = nd_assume(F("p"));
  leaf.mark = 1;
  NdDerivation inner(NdRule::ImpI, F("p -> p"), {leaf}, 1);
  NdDerivation outer(NdRule::ImpI, F("p -> p -> p"), {inner}, 1);
  CHECK(!check_nd(outer, NdProfile::nm_full()).valid);
}

TEST_CASE("profiles gate explosion, repetition and the lattice rules") {
  NdDerivation bot = nd_assume(Formula::bot());
  NdDerivation boom(NdRule::BotI, F("p"), {bot});
  CHECK(check_nd(boom, NdProfile::nm_int()).valid);
  CHECK(!check_nd(boom, NdProfile::nm_full()).valid);
  CHECK(!check_nd(boom, NdProfile::nm_imp()).valid);

  NdDerivation rep(NdRule::Rep, F("p"), {nd_assume(F("p"))});
  CHECK(check_nd(rep, NdProfile::nm_imp()).valid);
  CHECK(!check_nd(rep, NdProfile::nm_full()).valid);

  NdDerivation pq(NdRule::AndI, F("p & q"), {nd_assume(F("p")), nd_assume(F("q"))});
  CHECK(check_nd(pq, NdProfile::nm_full()).valid);
  CHECK(!check_nd(pq, NdProfile::nm_imp()).valid);

  // nm-imp rejects & and | even inside an assumption formula
  CHECK(!check_nd(nd_assume(F("p & q")), NdProfile::nm_imp()).valid);
  CHECK(check_nd(nd_assume(Formula::bot()), NdProfile::nm_imp()).valid);
}

TEST_CASE("disjunction elimination discharges per branch") {
  NdDerivation lp = nd_assume(F("p"));
  lp.mark = 1;
  NdDerivation lq = nd_assume(F("q"));
  lq.mark = 1;
  NdDerivation left(NdRule::OrI2, F("q | p"), {lp});
  NdDerivation right(NdRule::OrI1, F("q | p"), {lq});
  NdDerivation d(NdRule::OrE, F("q | p"), {nd_assume(F("p | q")), left, right}, 1);
  CHECK(check_nd(d, NdProfile::nm_full()).valid);
  CHECK(nd_open_assumptions(d) == FormulaSet{F("p | q")});

  // swapping the minor premises breaks which disjunct each branch may assume
  NdDerivation bad(NdRule::OrE, F("q | p"), {nd_assume(F("p | q")), right, left}, 1);
  CHECK(!check_nd(bad, NdProfile::nm_full()).valid);
}

TEST_CASE("rule shape violations are caught") {
  // ->E with swapped premise order
  NdDerivation bad(NdRule::ImpE, F("q"), {nd_assume(F("p -> q")), nd_assume(F("p"))});
  CHECK(!check_nd(bad, NdProfile::nm_full()).valid);
  NdDerivation good(NdRule::ImpE, F("q"), {nd_assume(F("p")), nd_assume(F("p -> q"))});
  CHECK(check_nd(good, NdProfile::nm_full()).valid);

  // ->I whose label is missing
  NdDerivation no_label(NdRule::ImpI, F("p -> p"), {nd_assume(F("p"))});
  CHECK(!check_nd(no_label, NdProfile::nm_full()).valid);

  // conclusion not matching the projection
  NdDerivation wrong(NdRule::AndE2, F("p"), {nd_assume(F("p & q"))});
  CHECK(!check_nd(wrong, NdProfile::nm_full()).valid);
}

TEST_CASE("canonical labels renumber dischargers in postorder") {
  NdDerivation leaf = nd_assume(F("p"));
  leaf.mark = 42;
  NdDerivation inner(NdRule::ImpI, F("p -> p"), {leaf}, 42);
  NdDerivation outer(NdRule::ImpI, F("q -> p -> p"), {inner}, 17);
  NdDerivation canon = nd_canonical_labels(outer);
  CHECK(check_nd(canon, NdProfile::nm_full()).valid);
  CHECK(canon.label == 2);
  CHECK(canon.children[0].label == 1);
  CHECK(canon.children[0].children[0].mark == 1);
  CHECK(nd_canonical_labels(canon) == canon);
}

TEST_CASE("marking and plugging open leaves") {
  NdDerivation d(NdRule::ImpE, F("q"), {nd_assume(F("p")), nd_assume(F("p -> q"))});
  nd_mark_open(d, F("p"), 9);
  CHECK(d.children[0].mark == 9);
  CHECK(!d.children[1].mark.has_value());

  NdDerivation host(NdRule::ImpE, F("q"), {nd_assume(F("p")), nd_assume(F("p -> q"))});
  NdDerivation plug(NdRule::AndE1, F("p"), {nd_assume(F("p & r"))});
  uint32_t next = 1;
  NdDerivation grafted = nd_plug_open(host, F("p"), plug, next, false);
  CHECK(check_nd(grafted, NdProfile::nm_full()).valid);
  CHECK(nd_open_assumptions(grafted) == FormulaSet{F("p & r"), F("p -> q")});

  // rep_wrap records the graft spot under a repetition node
  NdDerivation wrapped = nd_plug_open(host, F("p"), nd_assume(F("p")), next, true);
  CHECK(wrapped.children[0].kind == NdKind::Inference);
  CHECK(wrapped.children[0].rule == NdRule::Rep);
}

TEST_CASE("atom substitution rewrites formulas only") {
  NdDerivation d = and_elim();
  NdDerivation swapped = nd_substitute_atom(d, "p", F("x"));
  CHECK(swapped.formula == F("(x & q) -> x"));
  CHECK(check_nd(swapped, NdProfile::nm_full()).valid);
  CHECK(swapped.label == d.label);
}
