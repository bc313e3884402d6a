#pragma once
// Backward-chaining decision procedure for implicational sequents, reading
// bot as an ordinary atom; what it decides is therefore minimal-logic
// provability. Uses the unrestricted left-implication rule with a path loop
// check instead of a depth budget, so a negative answer is a verdict rather
// than a timeout. Independent of the calculus-profile prover on purpose:
// the two reach verdicts by different rule sets and different search
// disciplines, and the experiments compare them.

#include <unordered_map>

#include "proofbench/sequent.hpp"

namespace proofbench {

struct NaiveSequentKey {
  std::vector<const void*> antecedents; // set-based: sorted, deduped, interned
  const void* consequent = nullptr;
  bool operator==(const NaiveSequentKey&) const = default;
};

struct NaiveSequentKeyHash {
  size_t operator()(const NaiveSequentKey& k) const;
};

// Verdicts are unconditional: proofs always, failures only once they no
// longer depend on a loop block above the failing sequent. Safe to share
// across calls; the sweep reuses one cache for the whole formula stream.
struct NaiveCache {
  std::unordered_map<NaiveSequentKey, bool, NaiveSequentKeyHash> verdicts;
  uint64_t hits = 0;
  uint64_t misses = 0;
};

// Throws std::invalid_argument when any formula involves & or |.
// Antecedent multiplicity is ignored (contraction is built in).
bool naive_provable(const Sequent& goal, NaiveCache* cache = nullptr);
bool naive_provable(Formula goal, NaiveCache* cache = nullptr);

} // namespace proofbench
