#pragma once

#include "proofbench/sc.hpp"

namespace proofbench {

enum class ProveStatus { Proved, Unprovable, BudgetExhausted };

struct ProveResult {
  ProveStatus status = ProveStatus::Unprovable;
  std::optional<ScDerivation> derivation; // set iff Proved
  uint64_t nodes_expanded = 0;
};

// Backward proof search. Profiles with depth_budgeted=true get a depth cap of
// budget_multiplier * sequent_length(goal); exceeding it anywhere downgrades a
// failure to BudgetExhausted. Unbudgeted profiles terminate on their own.
inline constexpr uint32_t kDefaultBudgetMultiplier = 4;

ProveResult prove_sc(const Sequent& goal, const CalculusProfile& prof,
                     uint32_t budget_multiplier = kDefaultBudgetMultiplier);

inline ProveResult prove_sc(Formula goal, const CalculusProfile& prof,
                            uint32_t budget_multiplier = kDefaultBudgetMultiplier) {
  return prove_sc(Sequent{{}, goal}, prof, budget_multiplier);
}

} // namespace proofbench
