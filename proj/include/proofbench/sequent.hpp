#pragma once
// Single-conclusion sequents with a multiset antecedent.

#include <vector>

#include "proofbench/formula.hpp"

namespace proofbench {

struct Sequent {
  // Invariant: sorted by structural_cmp. Duplicates encode multiplicity.
  std::vector<Formula> antecedents;
  Formula consequent;

  Sequent(std::vector<Formula> ants, Formula c);

  bool contains(Formula f) const;
  size_t count(Formula f) const;

  Sequent with(Formula f) const;              // add one occurrence
  Sequent with(Formula f, Formula g) const;   // add two
  Sequent with3(Formula f, Formula g, Formula h) const;
  // Remove one occurrence; throws std::invalid_argument when absent.
  Sequent without(Formula f) const;
  Sequent replace_consequent(Formula c) const;

  bool operator==(const Sequent& o) const;
  bool operator!=(const Sequent& o) const { return !(*this == o); }
};

int sequent_cmp(const Sequent& a, const Sequent& b);

struct SequentLess {
  bool operator()(const Sequent& a, const Sequent& b) const { return sequent_cmp(a, b) < 0; }
};

// |s|: total formula length over antecedents and consequent.
uint32_t sequent_length(const Sequent& s);

// Every formula occurring in the sequent, in structural order.
std::vector<Formula> sequent_members(const Sequent& s);

uint64_t sequent_hash(const Sequent& s);

std::string format(const Sequent& s); // "p, q => r"

} // namespace proofbench
