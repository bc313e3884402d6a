#include <doctest.h>

#include "proofbench/sc_prover.hpp"
#include "proofbench/translate.hpp"

using namespace proofbench;

namespace {
Formula F(const char* s) { return parse_formula(s); }
} // namespace

TEST_CASE("translation preserves the conclusion and closes all assumptions") {
  const char* goals[] = {"(p & q) -> p", "p -> q -> p", "p & q -> q & p",
                         "(p | q) -> (q | p)", "((p -> q) & p) -> q"};
  for (const char* s : goals) {
    ProveResult r = prove_sc(F(s), CalculusProfile::lg_min());
    REQUIRE(r.status == ProveStatus::Proved);
    NdDerivation nd = translate_sc_to_nd(*r.derivation, NdProfile::nm_full());
    CHECK(check_nd(nd, NdProfile::nm_full()).valid);
    CHECK(nd.formula == F(s));
    CHECK(nd_open_assumptions(nd).empty());
    CHECK(nd == nd_canonical_labels(nd));
  }
}

TEST_CASE("implicational derivations land inside the implicational profile") {
  for (const char* s : {"p -> p", "(p -> q) -> (q -> r) -> p -> r",
                        "(p -> p -> q) -> p -> q", "((p -> q) -> q) -> (p -> q) -> q"}) {
    ProveResult r = prove_sc(F(s), CalculusProfile::lm_imp());
    REQUIRE(r.status == ProveStatus::Proved);
    NdDerivation nd = translate_sc_to_nd(*r.derivation, NdProfile::nm_imp());
    CHECK(check_nd(nd, NdProfile::nm_imp()).valid);
    CHECK(nd.formula == F(s));
    CHECK(nd_open_assumptions(nd).empty());
    // the same derivation also checks with repetition disabled
    NdDerivation plain = translate_sc_to_nd(*r.derivation, NdProfile::nm_full());
    CHECK(check_nd(plain, NdProfile::nm_full()).valid);
  }
}

TEST_CASE("open sequent premises become open assumptions") {
  ProveResult r = prove_sc(Sequent({F("p & q")}, F("p")), CalculusProfile::lg_min());
  REQUIRE(r.status == ProveStatus::Proved);
  NdDerivation nd = translate_sc_to_nd(*r.derivation, NdProfile::nm_full());
  CHECK(check_nd(nd, NdProfile::nm_full()).valid);
  CHECK(nd.formula == F("p"));
  CHECK(nd_open_assumptions(nd) == FormulaSet{F("p & q")});
}

TEST_CASE("explosion axiom has no minimal-logic counterpart") {
  ProveResult r = prove_sc(Sequent({Formula::bot()}, F("p")), CalculusProfile::lg_int());
  REQUIRE(r.status == ProveStatus::Proved);
  CHECK_THROWS_AS(translate_sc_to_nd(*r.derivation, NdProfile::nm_full()),
                  std::invalid_argument);
  CHECK_THROWS_AS(translate_sc_to_nd(*r.derivation, NdProfile::nm_imp()),
                  std::invalid_argument);
}

TEST_CASE("fresh-atom derivations still translate") {
  Formula goal = F("((p | q) -> r) -> p -> r");
  ProveResult r = prove_sc(goal, CalculusProfile::lg_min());
  REQUIRE(r.status == ProveStatus::Proved);
  NdDerivation nd = translate_sc_to_nd(*r.derivation, NdProfile::nm_full());
  CHECK(check_nd(nd, NdProfile::nm_full()).valid);
  CHECK(nd.formula == goal);
  CHECK(nd_open_assumptions(nd).empty());
}

TEST_CASE("height stays within the quadratic envelope") {
  for (const char* s : {"p -> p", "p -> q -> p", "(p -> p -> q) -> p -> q",
                        "((p -> q) -> q) -> ((q -> p) -> p) -> p -> q"}) {
    ProveResult r = prove_sc(F(s), CalculusProfile::lm_imp());
    if (r.status != ProveStatus::Proved) continue;
    uint32_t sh = sc_metrics(*r.derivation).height;
    NdDerivation nd = translate_sc_to_nd(*r.derivation, NdProfile::nm_imp());
    CHECK(nd_metrics(nd).height <= 8 * sh * sh);
  }
}
