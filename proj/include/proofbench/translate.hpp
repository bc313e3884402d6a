#pragma once

#include "proofbench/nd.hpp"
#include "proofbench/sc.hpp"

namespace proofbench {

// Maps a valid sequent derivation to a deduction of the same consequent whose
// open assumptions are contained in the root antecedents. Recursion on the
// derivation: axioms become open leaves, right rules become introductions,
// left rules plug a small local deduction into the matching open leaves of
// the recursively translated premise. With an nm-imp target each plugged
// spot is recorded under a Rep node. AxBot steps are rejected (the targets
// are minimal-logic systems); throws std::invalid_argument.
// Labels in the result are canonical (postorder 1,2,3,...).
NdDerivation translate_sc_to_nd(const ScDerivation& d, const NdProfile& target);

} // namespace proofbench
