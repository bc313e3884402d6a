#include <doctest.h>

#include "proofbench/kripke.hpp"
#include "proofbench/naive_prover.hpp"
#include "proofbench/sc_prover.hpp"

using namespace proofbench;

namespace {
Formula F(const char* s) { return parse_formula(s); }
} // namespace

TEST_CASE("classic implicational theorems are proved") {
  for (const char* s : {
           "p -> p",
           "p -> q -> p",                                    // K
           "(p -> q -> r) -> (p -> q) -> p -> r",            // S
           "(p -> q) -> (q -> r) -> p -> r",                 // B
           "(p -> p -> q) -> p -> q",                        // contraction
           "((p -> q) -> q) -> (p -> q) -> q",
           "bot -> bot",
       }) {
    CHECK(naive_provable(F(s)));
  }
}

TEST_CASE("minimal reading: no explosion, no classical shortcuts") {
  for (const char* s : {
           "bot -> p",                           // explosion
           "((p -> q) -> p) -> p",               // peirce
           "((p -> (q -> bot)) -> bot) -> p",    // encoded projection
           "((p -> bot) -> bot) -> p",           // double negation
           "p",
       }) {
    CHECK(!naive_provable(F(s)));
  }
}

TEST_CASE("sequent goals respect antecedents as a set") {
  Formula p = F("p"), q = F("q");
  CHECK(naive_provable(Sequent({F("p -> q"), p}, q)));
  CHECK(naive_provable(Sequent({p, p}, p)));
  CHECK(!naive_provable(Sequent({q}, p)));
  CHECK(naive_provable(Sequent({Formula::bot()}, Formula::bot())));
  CHECK(!naive_provable(Sequent({Formula::bot()}, p)));
}

TEST_CASE("lattice connectives are out of scope") {
  CHECK_THROWS_AS(naive_provable(F("p & q -> p")), std::invalid_argument);
  CHECK_THROWS_AS(naive_provable(F("p -> p | q")), std::invalid_argument);
  CHECK_THROWS_AS(naive_provable(Sequent({F("p & q")}, F("p"))), std::invalid_argument);
}

TEST_CASE("a shared cache returns the same verdicts and saves work") {
  NaiveCache cache;
  Formula f = F("(p -> q -> r) -> (p -> q) -> p -> r");
  bool first = naive_provable(f, &cache);
  uint64_t misses_after_first = cache.misses;
  bool second = naive_provable(f, &cache);
  CHECK(first == second);
  CHECK(cache.misses == misses_after_first); // fully answered from the cache
  CHECK(cache.hits > 0);

  // verdicts cached from one goal must not corrupt another
  CHECK(!naive_provable(F("((p -> q) -> p) -> p"), &cache));
  CHECK(naive_provable(f, &cache));
}

TEST_CASE("three oracles agree on every small one-atom formula") {
  // all implicational formulas over {p, bot} with at most 3 arrows
  std::vector<std::vector<Formula>> levels(4);
  levels[0] = {F("p"), Formula::bot()};
  for (uint32_t k = 1; k <= 3; ++k)
    for (uint32_t i = 0; i < k; ++i)
      for (Formula a : levels[i])
        for (Formula b : levels[k - 1 - i]) levels[k].push_back(Formula::imp(a, b));

  NaiveCache cache;
  uint32_t checked = 0;
  for (const auto& level : levels)
    for (Formula f : level) {
      bool nv = naive_provable(f, &cache);
      ProveResult pr = prove_sc(f, CalculusProfile::lm_imp());
      REQUIRE(pr.status != ProveStatus::BudgetExhausted);
      bool lm = pr.status == ProveStatus::Proved;
      KripkeResult kr = kripke_refute_rooted(f, KripkeSemantics::Minimal, 1, 3);
      CHECK(nv == lm);
      CHECK(nv == !kr.refuted); // every unprovable formula here has a tiny model
      ++checked;
    }
  CHECK(checked == 2 + 4 + 16 + 80);
}
