#pragma once
// Rule inventory and calculus profiles for the backward sequent engine.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace proofbench {

enum class RuleId : uint8_t {
  AxId,
  AxBot,
  GI1And,
  GI2And,
  GI1Or,
  GI2Or,
  GI1Imp,
  GI2Imp,
  GEAnd,
  GEOr,
  GEImpP,
  GEImpAnd,
  GEImpOr,
  GEImpImp,
};

// ASCII rule ids as used in serialized derivations: "GI1&", "GE->->", ...
const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);

struct RuleScheme {
  RuleId id;
  const char* name;
  const char* shape; // backward reading, conclusion / premises
  const char* note;  // formulation choice and its justification
};

// Static description of every rule, including the axiom schemes.
const std::vector<RuleScheme>& rule_table();

// Stable content hash over the rule table; embedded in experiment reports so
// a report pins the exact rule formulations it was produced under.
uint64_t rule_table_hash();

struct CalculusProfile {
  std::string name;
  bool axiom_bot = false;     // is "Gamma, bot => a" an axiom
  bool depth_budgeted = true; // search enforces the linear depth cap
  std::vector<RuleId> rules;  // enabled non-axiom rules

  bool enabled(RuleId r) const;

  static const CalculusProfile& lg_int();
  static const CalculusProfile& lg_min();
  static const CalculusProfile& lm_imp();
  static const CalculusProfile* by_name(std::string_view name); // nullptr if unknown
};

} // namespace proofbench
