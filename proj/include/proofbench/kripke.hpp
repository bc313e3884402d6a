#pragma once
// Finite Kripke countermodel search. Worlds are a partial order given as
// reflexive up-set bitmasks; valuations assign each atom an up-closed mask,
// so monotonicity holds by construction. Minimal semantics treats bot as one
// more persistent atom; intuitionistic semantics forces it nowhere.

#include <functional>

#include <nlohmann/json.hpp>

#include "proofbench/formula.hpp"

namespace proofbench {

enum class KripkeSemantics { Intuitionistic, Minimal };

struct Poset {
  uint32_t n = 1;
  std::vector<uint32_t> up; // up[w]: bitmask of v with w <= v, including w
};

// All partial orders on n unlabeled worlds, one representative per
// isomorphism class. Deterministic: candidates are transitive
// upper-triangular strict orders taken in ascending encoding order, the
// first member of each class wins. Cached per n.
const std::vector<Poset>& posets(uint32_t n);

// Orders with a least world (always world 0); in bijection with posets(n-1).
const std::vector<Poset>& rooted_posets(uint32_t n);

// Up-closed subsets, ascending as bitmasks.
std::vector<uint32_t> upsets(const Poset& p);

// Order automorphisms as permutation vectors (image of world w at index w).
std::vector<std::vector<uint8_t>> poset_automorphisms(const Poset& p);

// Every assignment of one up-set per slot (last slot changes fastest),
// skipping assignments that are not the lexicographically least member of
// their automorphism orbit. Stops early when fn returns false.
void for_each_canonical_valuation(const Poset& p, uint32_t slots,
                                  const std::function<bool(const std::vector<uint32_t>&)>& fn);

struct KripkeModel {
  uint32_t worlds = 1;
  std::vector<uint32_t> up;
  std::vector<std::pair<std::string, uint32_t>> val; // atom -> up-closed mask, name-sorted
  uint32_t bot_mask = 0;

  uint32_t atom_mask(const std::string& name) const;
};

// Worlds forcing f, as a bitmask. Persistent: always an up-set.
uint32_t force_mask(const KripkeModel& m, Formula f);
bool forces(const KripkeModel& m, uint32_t world, Formula f);
bool model_valid(const KripkeModel& m, Formula f);

struct KripkeResult {
  bool refuted = false;
  std::optional<KripkeModel> model; // first countermodel in enumeration order
  uint32_t world = 0;               // least world where f fails
  uint32_t max_worlds_tried = 0;
};

// Smallest models first: world count, then order enumeration rank, then
// valuation order. Under minimal semantics bot gets its own valuation slot
// (after the atoms) only when f mentions it.
KripkeResult kripke_refute(Formula f, KripkeSemantics sem, uint32_t max_worlds);

// Same search over rooted orders only, testing at the root. Equivalent for
// refutability (restrict any countermodel to the cone of a failing world)
// and much cheaper; the bulk sweeps use this form.
KripkeResult kripke_refute_rooted(Formula f, KripkeSemantics sem, uint32_t min_worlds,
                                  uint32_t max_worlds);

nlohmann::json kripke_model_to_json(const KripkeModel& m);
std::string format_kripke_model(const KripkeModel& m); // one line, human-readable

} // namespace proofbench
