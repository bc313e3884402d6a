#include <doctest.h>

#include "proofbench/kripke.hpp"

using namespace proofbench;

namespace {
Formula F(const char* s) { return parse_formula(s); }

uint64_t count_valuations(const Poset& p, uint32_t slots) {
  uint64_t n = 0;
  for_each_canonical_valuation(p, slots, [&](const std::vector<uint32_t>&) {
    ++n;
    return true;
  });
  return n;
}
} // namespace

TEST_CASE("poset counts match the catalogue of finite orders") {
  const uint64_t expect[] = {1, 2, 5, 16, 63, 318};
  for (uint32_t n = 1; n <= 6; ++n) CHECK(posets(n).size() == expect[n - 1]);
  CHECK_THROWS_AS(posets(0), std::invalid_argument);
  CHECK_THROWS_AS(posets(7), std::invalid_argument);

  const uint64_t rooted[] = {1, 1, 2, 5, 16, 63, 318};
  for (uint32_t n = 1; n <= 7; ++n) CHECK(rooted_posets(n).size() == rooted[n - 1]);
  for (const Poset& p : rooted_posets(4)) CHECK(p.up[0] == 0b1111u);
}

TEST_CASE("up-sets and automorphisms of small orders") {
  Poset chain2{2, {0b11, 0b10}};
  std::vector<uint32_t> u = upsets(chain2);
  CHECK(u == std::vector<uint32_t>{0b00, 0b10, 0b11});
  CHECK(poset_automorphisms(chain2).size() == 1);

  Poset anti2{2, {0b01, 0b10}};
  CHECK(upsets(anti2).size() == 4);
  CHECK(poset_automorphisms(anti2).size() == 2);

  // the rooted 3-world fork: 0 below 1 and 2, swapping the prongs
  Poset fork{3, {0b111, 0b010, 0b100}};
  CHECK(upsets(fork).size() == 5);
  CHECK(poset_automorphisms(fork).size() == 2);
}

TEST_CASE("canonical valuations count orbits, not raw tuples") {
  Poset one{1, {0b1}};
  CHECK(count_valuations(one, 3) == 8);

  Poset chain2{2, {0b11, 0b10}};
  CHECK(count_valuations(chain2, 3) == 27);

  Poset chain3{3, {0b111, 0b110, 0b100}};
  CHECK(count_valuations(chain3, 3) == 64);

  // fork prong swap: (5^3 + 3^3) / 2 tuples survive canonicalization
  Poset fork{3, {0b111, 0b010, 0b100}};
  CHECK(count_valuations(fork, 3) == 76);
}

TEST_CASE("minimal semantics refutes the encoded projection at one world") {
  KripkeResult r = kripke_refute(F("((p -> (q -> bot)) -> bot) -> p"),
                                 KripkeSemantics::Minimal, 3);
  REQUIRE(r.refuted);
  REQUIRE(r.model.has_value());
  CHECK(r.model->worlds == 1);
  CHECK(r.model->bot_mask == 0b1);
  CHECK(r.model->atom_mask("p") == 0);
  CHECK(r.model->atom_mask("q") == 0);
  CHECK(r.world == 0);
  CHECK(!forces(*r.model, 0, F("((p -> (q -> bot)) -> bot) -> p")));
}

TEST_CASE("intuitionistic semantics needs the two-world chain") {
  Formula f = F("((p -> (q -> bot)) -> bot) -> p");
  KripkeResult r = kripke_refute(f, KripkeSemantics::Intuitionistic, 3);
  REQUIRE(r.refuted);
  REQUIRE(r.model.has_value());
  CHECK(r.model->worlds == 2);
  CHECK(r.model->up == std::vector<uint32_t>{0b11, 0b10});
  CHECK(r.model->atom_mask("p") == 0b10);
  CHECK(r.model->atom_mask("q") == 0b10);
  CHECK(r.model->bot_mask == 0);
  CHECK(r.world == 0);
  CHECK(format_kripke_model(*r.model) == "worlds=2 up=[{0,1},{1}] p={1} q={1} bot={}");
}

TEST_CASE("excluded middle for implication fails up the chain") {
  Formula f = F("p | (p -> q)");
  KripkeResult r = kripke_refute(f, KripkeSemantics::Minimal, 3);
  REQUIRE(r.refuted);
  CHECK(r.model->worlds == 2);
  CHECK(r.model->up == std::vector<uint32_t>{0b11, 0b10});
  CHECK(r.model->atom_mask("p") == 0b10);
  CHECK(r.model->atom_mask("q") == 0);
  CHECK(r.world == 0);
}

TEST_CASE("valid formulas survive every model in the budget") {
  for (const char* s : {"p -> p", "p -> q -> p", "(p & q) -> p", "p -> p | q",
                        "((p -> q) & (q -> r)) -> p -> r"}) {
    KripkeResult r = kripke_refute(F(s), KripkeSemantics::Minimal, 4);
    CHECK(!r.refuted);
    CHECK(r.max_worlds_tried == 4);
  }
  // explosion holds intuitionistically but not minimally
  CHECK(!kripke_refute(F("bot -> p"), KripkeSemantics::Intuitionistic, 4).refuted);
  KripkeResult r = kripke_refute(F("bot -> p"), KripkeSemantics::Minimal, 4);
  REQUIRE(r.refuted);
  CHECK(r.model->worlds == 1);
  CHECK(r.model->bot_mask == 0b1);
  CHECK(r.model->atom_mask("p") == 0);
}

TEST_CASE("peirce separates classical from minimal truth") {
  Formula peirce = F("((p -> q) -> p) -> p");
  KripkeResult r = kripke_refute(peirce, KripkeSemantics::Minimal, 3);
  REQUIRE(r.refuted);
  CHECK(r.model->worlds == 2);
}

TEST_CASE("forcing is persistent and respects the connectives") {
  KripkeModel m;
  m.worlds = 2;
  m.up = {0b11, 0b10};
  m.val = {{"p", 0b10}, {"q", 0b00}};
  m.bot_mask = 0;
  for (const char* s : {"p", "q", "p -> q", "q -> p", "p & q", "p | q",
                        "(p -> q) -> q", "bot"}) {
    uint32_t mask = force_mask(m, F(s));
    // up-closed: anything forced at 0 is forced at 1
    CHECK((mask & 0b01 ? (mask & 0b10) != 0 : true));
  }
  CHECK(force_mask(m, F("p")) == 0b10);
  CHECK(force_mask(m, F("q -> p")) == 0b11);
  CHECK(force_mask(m, F("p -> q")) == 0b00);
  CHECK(forces(m, 1, F("p")));
  CHECK(!forces(m, 0, F("p")));
  CHECK(model_valid(m, F("q -> p")));
  CHECK(!model_valid(m, F("p")));
}

TEST_CASE("rooted search agrees with the unrooted one on refutability") {
  for (const char* s : {"((p -> (q -> bot)) -> bot) -> p", "p | (p -> q)",
                        "((p -> q) -> p) -> p", "p -> p", "p -> q -> p"}) {
    bool unrooted = kripke_refute(F(s), KripkeSemantics::Minimal, 3).refuted;
    bool rooted = kripke_refute_rooted(F(s), KripkeSemantics::Minimal, 1, 3).refuted;
    CHECK(unrooted == rooted);
  }
}

TEST_CASE("model serialization lists worlds per atom") {
  KripkeResult r = kripke_refute(F("((p -> (q -> bot)) -> bot) -> p"),
                                 KripkeSemantics::Intuitionistic, 3);
  REQUIRE(r.refuted);
  nlohmann::json j = kripke_model_to_json(*r.model);
  CHECK(j["worlds"] == 2);
  CHECK(j["up"][0] == nlohmann::json::array({0, 1}));
  CHECK(j["up"][1] == nlohmann::json::array({1}));
  CHECK(j["valuation"]["p"] == nlohmann::json::array({1}));
  CHECK(j["bot"] == nlohmann::json::array());
}
