#pragma once
// Propositional formulas over atoms, bot, ->, & and |.
// Values are immutable and interned: operator== is pointer comparison,
// and the structural hash stored in each node is stable across runs.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace proofbench {

enum class Conn : uint8_t { Atom, Bot, Imp, And, Or };

namespace detail {
struct FormulaNode {
  Conn kind;
  uint32_t length;  // parse-tree node count: atom occurrences + connective occurrences
  uint64_t hash;    // structural hash; no pointers involved, reproducible across runs
  std::string name; // Atom only
  const FormulaNode* left = nullptr;
  const FormulaNode* right = nullptr;
};
} // namespace detail

class Formula {
public:
  static Formula atom(std::string_view name);
  static Formula bot();
  static Formula imp(Formula a, Formula b);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);

  Conn kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == Conn::Atom; }
  bool is_bot() const { return node_->kind == Conn::Bot; }
  // atomic = Atom or Bot; the calculi treat bot as an ordinary atomic formula
  // unless a profile says otherwise.
  bool is_atomic() const { return is_atom() || is_bot(); }
  bool is_imp() const { return node_->kind == Conn::Imp; }

  const std::string& atom_name() const;
  Formula lhs() const;
  Formula rhs() const;

  uint32_t length() const { return node_->length; }
  uint64_t hash() const { return node_->hash; }

  bool operator==(const Formula& o) const { return node_ == o.node_; }
  bool operator!=(const Formula& o) const { return node_ != o.node_; }

  const detail::FormulaNode* raw() const { return node_; }

private:
  explicit Formula(const detail::FormulaNode* n) : node_(n) {}
  const detail::FormulaNode* node_;
};

// Total order on formulas: structural hash first, full structural compare on
// ties. Deterministic across runs; used wherever iteration order matters.
int structural_cmp(Formula a, Formula b);

struct FormulaLess {
  bool operator()(Formula a, Formula b) const { return structural_cmp(a, b) < 0; }
};

using FormulaSet = std::set<Formula, FormulaLess>;

struct FormulaHash {
  size_t operator()(Formula f) const { return static_cast<size_t>(f.hash()); }
};

// --- concrete syntax ---------------------------------------------------
//
//   formula ::= imp
//   imp     ::= or ('->' imp)?            right-associative, binds loosest
//   or      ::= and ('|' and)*            left-associative
//   and     ::= unit ('&' unit)*          left-associative, binds tightest
//   unit    ::= atom | 'bot' | '_|_' | '(' formula ')'
//   atom    ::= '_'? [a-z] [a-z0-9_]*
//
// Whitespace is insignificant. Atom names starting with '_' are reserved for
// generated atoms; the parser accepts them so emitted files re-read cleanly.

struct ParseError : std::runtime_error {
  ParseError(std::string msg, size_t at, std::string exp);
  size_t offset;        // byte offset of the offending token
  std::string expected; // human-readable expected-token set
};

Formula parse_formula(std::string_view text);

// Renders with parentheses around any compound subformula whose connective
// differs from its parent's, plus the non-associative side of a chain.
// parse_formula(format(f)) == f.
std::string format(Formula f);

// --- measures and subformula machinery ---------------------------------

struct FormulaMeasure {
  uint32_t length = 0;           // |rho|
  uint32_t connective_count = 0; // bot counts as a nullary connective
  std::set<std::string> atom_set;
};

FormulaMeasure measure(Formula f);

FormulaSet subformulas(Formula f);

// Least superset of subformulas(f) closed under: if (a->b)->c is in the set
// then so is b->c.
FormulaSet semi_subformulas(Formula f);

// --- classical (truth-table) validity -----------------------------------

struct Assignment {
  std::map<std::string, bool> atoms;
  bool bot_as_atom = false;
  bool bot_value = false; // meaningful only when bot_as_atom
};

struct ClassicalVerdict {
  bool valid = false;
  std::optional<Assignment> countermodel; // first falsifying assignment found
};

bool eval_classical(Formula f, const Assignment& a);

// bot_as_atom: enumerate a truth value for bot instead of fixing it false.
// Throws std::invalid_argument when the formula has more than max_atoms atoms.
ClassicalVerdict classical_valid(Formula f, bool bot_as_atom, unsigned max_atoms = 20);

// --- connective encodings into the {->, bot} fragment --------------------

struct ImpEncoding {
  std::function<Formula(Formula, Formula)> and_rule;
  std::function<Formula(Formula, Formula)> or_rule;
  // and: p & q       |->  (p -> (q -> bot)) -> bot
  // or:  p | q       |->  (p -> bot) -> ((q -> bot) -> bot)
  // The or rule is configuration data only; no faithfulness is claimed for it.
  static const ImpEncoding& standard();
};

Formula imp_encode(Formula f, const ImpEncoding& enc = ImpEncoding::standard());

// Replace every bot by the named atom. Throws std::invalid_argument when the
// name already occurs in f.
Formula atomize_bot(Formula f, const std::string& fresh);

bool contains_bot(Formula f);
bool contains_atom(Formula f, const std::string& name);

// Smallest "_f<k>" not occurring in any of the given formulas. Leading
// underscore is reserved: user-written atoms cannot collide.
std::string next_fresh_atom(const std::vector<Formula>& context);

} // namespace proofbench
