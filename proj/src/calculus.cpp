#include "proofbench/calculus.hpp"

#include <stdexcept>

namespace proofbench {

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::AxId: return "AxId";
    case RuleId::AxBot: return "AxBot";
    case RuleId::GI1And: return "GI1&";
    case RuleId::GI2And: return "GI2&";
    case RuleId::GI1Or: return "GI1|";
    case RuleId::GI2Or: return "GI2|";
    case RuleId::GI1Imp: return "GI1->";
    case RuleId::GI2Imp: return "GI2->";
    case RuleId::GEAnd: return "GE&";
    case RuleId::GEOr: return "GE|";
    case RuleId::GEImpP: return "GE->P";
    case RuleId::GEImpAnd: return "GE->&";
    case RuleId::GEImpOr: return "GE->|";
    case RuleId::GEImpImp: return "GE->->";
  }
  throw std::logic_error("unreachable");
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const RuleScheme& r : rule_table())
    if (name == r.name) return r.id;
  return std::nullopt;
}

const std::vector<RuleScheme>& rule_table() {
  // Shapes read backward: conclusion above "<=", premises after. G is the
  // untouched context multiset; lowercase p is atomic (an atom or bot).
  static const std::vector<RuleScheme> table = {
      {RuleId::AxId, "AxId", "G, p => p",
       "identity axiom, atomic consequents only; bot counts as atomic so bot => bot closes in "
       "every profile"},
      {RuleId::AxBot, "AxBot", "G, bot => p",
       "ex falso axiom for atomic consequents; the only place bot is special, enabled in the "
       "intuitionistic profile only"},
      {RuleId::GI1And, "GI1&", "G => A&B  <=  G => A ; G => B",
       "standard right conjunction, used when the left conjunct is not an antecedent"},
      {RuleId::GI2And, "GI2&", "G, A => A&B  <=  G, A => B",
       "presence variant of GI1&: an antecedent copy of A stands in for the first premise, "
       "mirroring the GI1/GI2 split for implication; reconstructed, not taken from a source "
       "text"},
      {RuleId::GI1Or, "GI1|", "G => A|B  <=  G => A", "right disjunction, left disjunct"},
      {RuleId::GI2Or, "GI2|", "G => A|B  <=  G => B", "right disjunction, right disjunct"},
      {RuleId::GI1Imp, "GI1->", "G => A->B  <=  G, A => B   (A not in G)",
       "right implication when the antecedent is new; the side condition keeps sequents "
       "duplicate-free, which is what bounds backward depth linearly"},
      {RuleId::GI2Imp, "GI2->", "G, A => A->B  <=  G, A => B",
       "right implication when A is already an antecedent; no second copy is added "
       "(contraction is admissible, one copy suffices)"},
      {RuleId::GEAnd, "GE&", "G, A&B => D  <=  G, A, B => D",
       "standard contraction-free left conjunction"},
      {RuleId::GEOr, "GE|", "G, A|B => D  <=  G, A => D ; G, B => D",
       "standard contraction-free left disjunction"},
      {RuleId::GEImpP, "GE->P", "G, p, p->B => D  <=  G, p, B => D",
       "atomic-antecedent implication, Dyckhoff's L0: consumes the implication, keeps the "
       "atom; invertible"},
      {RuleId::GEImpAnd, "GE->&", "G, (A&B)->C => D  <=  G, A->(B->C) => D",
       "curries a conjunctive antecedent; invertible"},
      {RuleId::GEImpOr, "GE->|",
       "G, (A|B)->C => D  <=  G, A->p, B->p, p->C => D   (p a fresh atom)",
       "Hudelmaier-style splitting with a fresh atom, which keeps premise formulas small and "
       "backward depth linear; freshness is checked against the entire conclusion (context "
       "included), since a collision anywhere breaks soundness"},
      {RuleId::GEImpImp, "GE->->",
       "G, (A->B)->C => D  <=  G, B->C => A->B ; G, C => D",
       "nested-implication antecedent, Dyckhoff's L->->: the only non-invertible left rule; "
       "its first premise introduces B->C, exactly the semi-subformula closure shape"},
  };
  return table;
}

uint64_t rule_table_hash() {
  uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&h](const char* s) {
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001b3ull;
    h = (h ^ 0x1f) * 0x100000001b3ull;
  };
  for (const RuleScheme& r : rule_table()) {
    feed(r.name);
    feed(r.shape);
  }
  return h;
}

bool CalculusProfile::enabled(RuleId r) const {
  for (RuleId x : rules)
    if (x == r) return true;
  return false;
}

const CalculusProfile& CalculusProfile::lg_int() {
  static const CalculusProfile p{
      "lg-int",
      true,
      true,
      {RuleId::GI1And, RuleId::GI2And, RuleId::GI1Or, RuleId::GI2Or, RuleId::GI1Imp,
       RuleId::GI2Imp, RuleId::GEAnd, RuleId::GEOr, RuleId::GEImpP, RuleId::GEImpAnd,
       RuleId::GEImpOr, RuleId::GEImpImp}};
  return p;
}

const CalculusProfile& CalculusProfile::lg_min() {
  static const CalculusProfile p{
      "lg-min",
      false,
      true,
      {RuleId::GI1And, RuleId::GI2And, RuleId::GI1Or, RuleId::GI2Or, RuleId::GI1Imp,
       RuleId::GI2Imp, RuleId::GEAnd, RuleId::GEOr, RuleId::GEImpP, RuleId::GEImpAnd,
       RuleId::GEImpOr, RuleId::GEImpImp}};
  return p;
}

const CalculusProfile& CalculusProfile::lm_imp() {
  static const CalculusProfile p{
      "lm-imp",
      false,
      false, // terminating without a budget: every rule shrinks the sequent multiset
      {RuleId::GI1Imp, RuleId::GI2Imp, RuleId::GEImpP, RuleId::GEImpImp}};
  return p;
}

const CalculusProfile* CalculusProfile::by_name(std::string_view name) {
  if (name == "lg-int") return &lg_int();
  if (name == "lg-min") return &lg_min();
  if (name == "lm-imp") return &lm_imp();
  return nullptr;
}

} // namespace proofbench
