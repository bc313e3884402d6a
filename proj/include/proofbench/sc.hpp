#pragma once
// Sequent derivations: representation, checking, metrics, serialization.

#include <nlohmann/json.hpp>

#include "proofbench/calculus.hpp"
#include "proofbench/sequent.hpp"

namespace proofbench {

// Schema slots fixed by a rule application. The context multiset and the
// consequent D are implicit in the conclusion and are not stored.
struct RuleInst {
  std::optional<Formula> a, b, c;
  std::optional<Formula> p; // atomic slot (AxId/AxBot consequent, GE->P atom, GE->| fresh atom)
};

struct ScDerivation {
  Sequent conclusion;
  RuleId rule;
  RuleInst inst;
  std::vector<ScDerivation> premises;
};

struct ScCheckResult {
  bool valid = false;
  std::vector<int> path; // child indices to the first violating node
  std::string reason;
};

// Verifies every node against its rule scheme under the profile: multiset
// bookkeeping, side conditions, premise shapes, instantiation consistency.
ScCheckResult check_sc(const ScDerivation& d, const CalculusProfile& prof);

struct ScMetrics {
  uint32_t height = 0;     // edges on the longest branch
  uint32_t size = 0;       // node count
  uint32_t foundation = 0; // distinct formulas occurring in any sequent
};

ScMetrics sc_metrics(const ScDerivation& d);

// Formulas occurring anywhere in the derivation (every antecedent and
// consequent of every node), deduplicated.
FormulaSet sc_occurring_formulas(const ScDerivation& d);

struct AuditViolation {
  Formula formula;
  std::vector<int> path; // first node (dfs order) where it occurs
};

struct AuditResult {
  bool holds = false;
  std::vector<AuditViolation> violations; // one entry per offending formula
};

// Checks that every formula occurring in d lies in semi_subformulas(rho).
AuditResult semi_subformula_audit(const ScDerivation& d, Formula rho);

struct GeImpOrStep {
  std::vector<Sequent> premises; // single element; kept as a list to match rule arity
  RuleInst inst;
};

// Backward application of GE->| to the first matching antecedent, with a
// deterministically generated fresh atom. Throws std::invalid_argument when
// no antecedent has the shape (A|B)->C.
GeImpOrStep apply_ge_imp_or(const Sequent& target);

// --- serialization -------------------------------------------------------

nlohmann::json sequent_to_json(const Sequent& s);
Sequent sequent_from_json(const nlohmann::json& j); // throws std::invalid_argument

nlohmann::json sc_to_json(const ScDerivation& d);
ScDerivation sc_from_json(const nlohmann::json& j);

// Canonical bytes for golden files: 2-space indent, sorted keys, trailing newline.
std::string dump_json(const nlohmann::json& j);

} // namespace proofbench
