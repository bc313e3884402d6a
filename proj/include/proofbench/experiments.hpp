#pragma once
// Scripted demonstrations. Each returns machine (json) and human (text)
// forms of the same report; growth additionally fills the csv field. The
// `passed` flag is the conjunction of every check the report ran, and every
// report embeds the rule table hash and budgets it ran under.

#include <nlohmann/json.hpp>

#include "proofbench/formula.hpp"

namespace proofbench {

struct ExperimentReport {
  bool passed = false;
  nlohmann::json json;
  std::string text;
  std::string csv; // growth tables only
};

// Incompleteness demonstration, four parts: (a) (p&q)->p carries a checked
// sequent derivation without the bot axiom and a checked natural deduction;
// (b) its encoding ((p->(q->bot))->bot)->p is exhaustively unprovable in the
// implicational calculus; (c) swapping bot for the fresh atom r yields a
// formula with a classical countermodel (p false, r true); (d) the pieces
// fit: the swap preserves provability, so no calculus blind to the
// difference between bot and an atom can prove the encoding.
ExperimentReport counterexample_report();

struct SweepOptions {
  uint32_t max_connectives = 7;             // arrow count budget
  std::vector<std::string> atoms = {"p", "q"}; // bot is always included
  uint32_t kripke_library_worlds = 3;  // rooted models checked for every formula
  uint32_t kripke_escalate_worlds = 5; // deeper search when the library is silent
  uint32_t height_envelope_k = 8;      // nd_height <= K * sc_height^2
};

// Exhaustive agreement sweep over the implicational fragment, one streaming
// pass per formula: both provers, the Kripke library, atom-swap invariance,
// and for each provable formula the audit / translation / compression /
// classical-soundness checks.
ExperimentReport agreement_sweep(const SweepOptions& opt = {});

// Families: "nested-k" (a1->(a2->(...->(an->a1)))), linear growth, no
// sharing to exploit; "reuse-heavy" ((p->(p->...->q))->(p->q), n nested ps),
// whose translation repeats subdeductions that sharing collapses.
ExperimentReport growth_report(const std::string& family, uint32_t max_index);

// Proves ((p|q)->r)->(p->r) without the bot axiom, which forces the
// fresh-atom rule for implication-over-disjunction, then shows the audit
// rejecting the fresh-atom formulas: the semi-subformula property does not
// survive that rule.
ExperimentReport semi_subformula_violation_demo();

} // namespace proofbench
