#pragma once
// Natural deduction with discharge: tree representation, profile-aware
// checking, metrics, construction helpers, serialization.

#include <nlohmann/json.hpp>

#include "proofbench/formula.hpp"

namespace proofbench {

enum class NdKind : uint8_t { Assumption, Inference };

enum class NdRule : uint8_t {
  AndI,
  AndE1,
  AndE2,
  OrI1,
  OrI2,
  OrE,
  ImpI,
  ImpE,
  BotI,
  Rep,
};

// "&I", "->E", "botI", ...
const char* nd_rule_name(NdRule r);
std::optional<NdRule> nd_rule_from_name(std::string_view name);

// Discharge bookkeeping: ->I and |E carry a label; an assumption leaf whose
// mark equals that label is discharged by it. The discharged formula is never
// stored, it is forced by the rule (->I: antecedent of the conclusion; |E:
// the disjuncts of child 0). Labels are unique per derivation; vacuous
// discharge (a label marking no leaf) is allowed.
struct NdDerivation {
  NdKind kind = NdKind::Assumption;
  Formula formula;
  std::optional<uint32_t> mark;  // assumption only; absent = open
  NdRule rule = NdRule::ImpE;    // inference only
  std::optional<uint32_t> label; // inference only; required for ->I and |E
  std::vector<NdDerivation> children;

  explicit NdDerivation(Formula f) : formula(f) {}
  NdDerivation(NdRule r, Formula f, std::vector<NdDerivation> kids,
               std::optional<uint32_t> lbl = std::nullopt)
      : kind(NdKind::Inference), formula(f), rule(r), label(lbl), children(std::move(kids)) {}

  bool operator==(const NdDerivation&) const = default;
};

inline NdDerivation nd_assume(Formula f) { return NdDerivation(f); }

struct NdProfile {
  std::string name;
  bool allow_and_or = true; // &/| rules usable and &/| allowed inside formulas
  bool allow_bot_i = false;
  bool allow_rep = false;

  static const NdProfile& nm_full();
  static const NdProfile& nm_int();
  static const NdProfile& nm_imp();
  static const NdProfile* by_name(std::string_view name); // nullptr if unknown
};

// Purely implicational syntax: atoms, bot and -> only.
bool implicational_only(Formula f);

bool nd_rule_allowed(const NdProfile& prof, NdRule r);

struct NdCheckResult {
  bool valid = false;
  std::vector<int> path;
  std::string reason;
};

// Verifies rule shapes, discharge scoping (marks resolve to an ancestor's
// label with the formula the rule discharges there), label uniqueness, and
// the profile's rule/connective restrictions.
NdCheckResult check_nd(const NdDerivation& d, const NdProfile& prof);

struct NdMetrics {
  uint32_t height = 0;     // edges on the longest branch
  uint32_t size = 0;       // node count
  uint32_t foundation = 0; // distinct formulas on nodes
};

NdMetrics nd_metrics(const NdDerivation& d);

// Distinct formulas of unmarked assumption leaves.
FormulaSet nd_open_assumptions(const NdDerivation& d);

uint32_t nd_max_label(const NdDerivation& d);

// Relabels dischargers 1,2,3,... in postorder (the order a reader numbers
// them on the page) and remaps marks accordingly. Semantics preserved.
NdDerivation nd_canonical_labels(const NdDerivation& d);

// Marks every open leaf of the given formula with the label (in place).
void nd_mark_open(NdDerivation& d, Formula assumption, uint32_t label);

// Replaces every open leaf of formula `hole` with a copy of `plug` whose
// labels are refreshed from `next_label` to keep global uniqueness. With
// rep_wrap each graft is recorded under a repetition node, so the grafted
// spot still reads as the original hole formula.
NdDerivation nd_plug_open(const NdDerivation& d, Formula hole, const NdDerivation& plug,
                          uint32_t& next_label, bool rep_wrap);

// Rewrites atom `name` to `repl` in every node formula. Discharge structure
// is untouched (it is label-based, and discharge formulas are derived).
NdDerivation nd_substitute_atom(const NdDerivation& d, const std::string& name, Formula repl);

nlohmann::json nd_to_json(const NdDerivation& d);
NdDerivation nd_from_json(const nlohmann::json& j); // throws std::invalid_argument

} // namespace proofbench
