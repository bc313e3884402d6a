#include "proofbench/naive_prover.hpp"

#include <algorithm>
#include <stdexcept>

namespace proofbench {

size_t NaiveSequentKeyHash::operator()(const NaiveSequentKey& k) const {
  size_t h = std::hash<const void*>{}(k.consequent);
  for (const void* p : k.antecedents)
    h = h * 1099511628211ull ^ std::hash<const void*>{}(p);
  return h;
}

namespace {

constexpr uint32_t kNoBlock = UINT32_MAX;

bool implicational(Formula f) {
  if (f.is_atomic()) return true;
  return f.is_imp() && implicational(f.lhs()) && implicational(f.rhs());
}

NaiveSequentKey make_key(const std::vector<Formula>& ants, Formula cons) {
  NaiveSequentKey k;
  k.antecedents.reserve(ants.size());
  for (Formula f : ants) k.antecedents.push_back(f.raw());
  k.consequent = cons.raw();
  return k;
}

// Set insertion preserving sort order; returns the input unchanged when
// already present.
std::vector<Formula> with_member(const std::vector<Formula>& ants, Formula f) {
  auto it = std::lower_bound(ants.begin(), ants.end(), f, FormulaLess{});
  if (it != ants.end() && *it == f) return ants;
  std::vector<Formula> out;
  out.reserve(ants.size() + 1);
  out.insert(out.end(), ants.begin(), it);
  out.push_back(f);
  out.insert(out.end(), it, ants.end());
  return out;
}

struct Prover {
  NaiveCache& cache;
  std::vector<NaiveSequentKey> path;

  // min_block: least path depth of any loop block this failure rests on,
  // kNoBlock when the failure (or success) stands on its own.
  bool prove(const std::vector<Formula>& ants, Formula cons, uint32_t& min_block) {
    min_block = kNoBlock;
    NaiveSequentKey key = make_key(ants, cons);
    if (auto it = cache.verdicts.find(key); it != cache.verdicts.end()) {
      ++cache.hits;
      return it->second;
    }
    ++cache.misses;
    if (std::binary_search(ants.begin(), ants.end(), cons, FormulaLess{})) {
      cache.verdicts.emplace(std::move(key), true);
      return true;
    }
    for (uint32_t i = 0; i < path.size(); ++i)
      if (path[i] == key) {
        min_block = i;
        return false;
      }

    const uint32_t depth = static_cast<uint32_t>(path.size());
    path.push_back(key);
    bool proved = false;
    if (cons.is_imp()) {
      // right rule, invertible
      uint32_t mb = kNoBlock;
      proved = prove(with_member(ants, cons.lhs()), cons.rhs(), mb);
      if (!proved) min_block = std::min(min_block, mb);
    } else {
      // left implication on each candidate; the major premise keeps the
      // principal formula, the loop check is what stops the regress
      for (Formula f : ants) {
        if (!f.is_imp()) continue;
        uint32_t mb = kNoBlock;
        if (!prove(ants, f.lhs(), mb)) {
          min_block = std::min(min_block, mb);
          continue;
        }
        if (prove(with_member(ants, f.rhs()), cons, mb)) {
          proved = true;
          break;
        }
        min_block = std::min(min_block, mb);
      }
    }
    path.pop_back();

    if (proved) {
      min_block = kNoBlock;
      cache.verdicts.emplace(std::move(key), true);
      return true;
    }
    if (min_block >= depth) {
      // every block pointed at this sequent or below, both gone once we
      // pop, so the failure holds in any context
      min_block = kNoBlock;
      cache.verdicts.emplace(std::move(key), false);
    }
    return false;
  }
};

} // namespace

bool naive_provable(const Sequent& goal, NaiveCache* cache) {
  for (Formula f : goal.antecedents)
    if (!implicational(f))
      throw std::invalid_argument("naive_provable: antecedent not implicational: " + format(f));
  if (!implicational(goal.consequent))
    throw std::invalid_argument("naive_provable: consequent not implicational: " +
                                format(goal.consequent));
  std::vector<Formula> ants = goal.antecedents; // already sorted
  ants.erase(std::unique(ants.begin(), ants.end()), ants.end());
  NaiveCache local;
  Prover pr{cache ? *cache : local, {}};
  uint32_t mb = kNoBlock;
  return pr.prove(ants, goal.consequent, mb);
}

bool naive_provable(Formula goal, NaiveCache* cache) {
  return naive_provable(Sequent({}, goal), cache);
}

} // namespace proofbench
