#include <doctest.h>

#include "proofbench/formula.hpp"

using namespace proofbench;

TEST_CASE("parsing respects precedence and associativity") {
  Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  CHECK(parse_formula("p -> q -> r") == Formula::imp(p, Formula::imp(q, r)));
  CHECK(parse_formula("p & q | r") == Formula::disj(Formula::conj(p, q), r));
  CHECK(parse_formula("p | q & r") == Formula::disj(p, Formula::conj(q, r)));
  CHECK(parse_formula("p & q -> r") == Formula::imp(Formula::conj(p, q), r));
  CHECK(parse_formula("p & q & r") == Formula::conj(Formula::conj(p, q), r));
  CHECK(parse_formula("(p -> q) -> r") != parse_formula("p -> q -> r"));
  CHECK(parse_formula("bot") == Formula::bot());
  CHECK(parse_formula("_|_") == Formula::bot());
  CHECK(parse_formula("_f0") == Formula::atom("_f0"));
}

TEST_CASE("interning makes equality pointer equality") {
  Formula a = parse_formula("(p -> q) & (p -> q)");
  CHECK(a.lhs() == a.rhs());
  CHECK(a.lhs().raw() == a.rhs().raw());
  CHECK(parse_formula("p->q") == Formula::imp(Formula::atom("p"), Formula::atom("q")));
}

TEST_CASE("format round-trips and parenthesizes minimally") {
  const char* cases[] = {
      "p",
      "p -> q -> r",
      "(p -> q) -> r",
      "p & q & r",
      "p & (q & r)",
      "(p | q) & r",
      "p & q | r",
      "(p & q) -> p",
      "((p -> (q -> bot)) -> bot) -> p",
      "_|_ -> p",
  };
  for (const char* c : cases) {
    Formula f = parse_formula(c);
    CHECK(parse_formula(format(f)) == f);
  }
  CHECK(format(parse_formula("(p&q)->p")) == "(p & q) -> p");
  CHECK(format(parse_formula("p->(q->r)")) == "p -> q -> r");
  CHECK(format(parse_formula("(p->q)->r")) == "(p -> q) -> r");
  CHECK(format(Formula::bot()) == "bot");
}

TEST_CASE("parse errors carry the offending offset") {
  CHECK_THROWS_AS(parse_formula("p ->"), ParseError);
  try {
    parse_formula("p ->");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p -> q"), ParseError);
  CHECK_THROWS_AS(parse_formula("P"), ParseError);
}

TEST_CASE("measure counts bot as a connective, not an atom") {
  FormulaMeasure m = measure(parse_formula("((p -> (q -> bot)) -> bot) -> p"));
  CHECK(m.length == 9);
  CHECK(m.connective_count == 6);
  CHECK(m.atom_set == std::set<std::string>{"p", "q"});
  CHECK(measure(Formula::bot()).length == 1);
  CHECK(measure(Formula::bot()).atom_set.empty());
}

TEST_CASE("subformulas and the semi-subformula closure") {
  Formula f = parse_formula("p -> q -> p");
  CHECK(subformulas(f).size() == 4);

  // (a->b)->c contributes b->c on top of its subformulas
  Formula g = parse_formula("(p -> q) -> r");
  FormulaSet semi = semi_subformulas(g);
  CHECK(subformulas(g).size() == 5);
  CHECK(semi.size() == 6);
  CHECK(semi.count(parse_formula("q -> r")) == 1);

  // closure applies to nested implications too, but only ever adds b->c
  FormulaSet semi2 = semi_subformulas(parse_formula("((p -> q) -> r) -> s"));
  CHECK(semi2.count(parse_formula("r -> s")) == 1);
  CHECK(semi2.count(parse_formula("q -> r")) == 1);
  CHECK(semi2.count(parse_formula("(q -> r) -> s")) == 0);
  CHECK(semi2.size() == 9);
}

TEST_CASE("classical validity and countermodels") {
  CHECK(classical_valid(parse_formula("p -> p"), false).valid);
  CHECK(classical_valid(parse_formula("((p -> q) -> p) -> p"), false).valid);
  CHECK(classical_valid(parse_formula("bot -> p"), false).valid);

  ClassicalVerdict v = classical_valid(parse_formula("((p -> (q -> r)) -> r) -> p"), false);
  REQUIRE(!v.valid);
  REQUIRE(v.countermodel.has_value());
  CHECK(v.countermodel->atoms.at("p") == false);
  CHECK(v.countermodel->atoms.at("q") == false);
  CHECK(v.countermodel->atoms.at("r") == true);

  // with bot read as an atom, explosion is no longer valid
  CHECK(!classical_valid(parse_formula("bot -> p"), true).valid);
}

TEST_CASE("atomize_bot swaps every bot for the named atom") {
  Formula f = parse_formula("((p -> (q -> bot)) -> bot) -> p");
  CHECK(atomize_bot(f, "r") == parse_formula("((p -> (q -> r)) -> r) -> p"));
  CHECK(atomize_bot(parse_formula("p -> q"), "r") == parse_formula("p -> q"));
  CHECK_THROWS_AS(atomize_bot(f, "p"), std::invalid_argument);
  CHECK(contains_bot(f));
  CHECK(!contains_bot(atomize_bot(f, "r")));
  CHECK(contains_atom(f, "q"));
  CHECK(!contains_atom(f, "r"));
}

TEST_CASE("implicational encoding of conjunction") {
  Formula enc = imp_encode(parse_formula("p & q -> p"));
  CHECK(enc == parse_formula("((p -> (q -> bot)) -> bot) -> p"));
  CHECK(imp_encode(parse_formula("p -> q")) == parse_formula("p -> q"));
}

TEST_CASE("fresh atom generation skips occupied names") {
  CHECK(next_fresh_atom({}) == "_f0");
  CHECK(next_fresh_atom({parse_formula("p -> q")}) == "_f0");
  CHECK(next_fresh_atom({parse_formula("_f0 -> _f2")}) == "_f1");
  CHECK(next_fresh_atom({parse_formula("_f0"), parse_formula("_f1")}) == "_f2");
}

TEST_CASE("structural order is total and deterministic") {
  Formula a = parse_formula("p"), b = parse_formula("q -> r");
  CHECK(structural_cmp(a, a) == 0);
  CHECK(structural_cmp(a, b) == -structural_cmp(b, a));
  FormulaSet s;
  s.insert(a);
  s.insert(b);
  s.insert(a);
  CHECK(s.size() == 2);
}
