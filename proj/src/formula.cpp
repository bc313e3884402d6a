#include "proofbench/formula.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace proofbench {

namespace {

uint64_t mix(uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

uint64_t hash_atom(std::string_view name) {
  uint64_t h = 0x51ed270b5a3c4869ull;
  for (char c : name) h = mix(h ^ static_cast<unsigned char>(c));
  return h;
}

uint64_t hash_node(Conn k, uint64_t hl, uint64_t hr) {
  return mix(static_cast<uint64_t>(k) * 0xff51afd7ed558ccdull ^ mix(hl) ^ (hr * 0xc4ceb9fe1a85ec53ull));
}

struct InternKey {
  Conn kind;
  const detail::FormulaNode* l;
  const detail::FormulaNode* r;
  std::string_view name;
  bool operator==(const InternKey& o) const {
    return kind == o.kind && l == o.l && r == o.r && name == o.name;
  }
};

struct InternKeyHash {
  size_t operator()(const InternKey& k) const {
    size_t h = std::hash<const void*>()(k.l) * 31 + std::hash<const void*>()(k.r);
    h = h * 131 + static_cast<size_t>(k.kind);
    for (char c : k.name) h = h * 257 + static_cast<unsigned char>(c);
    return h;
  }
};

// Keep-alive intern table: nodes live for the process lifetime, so raw
// pointers inside Formula stay valid and equality is pointer equality.
struct Interner {
  std::mutex mu;
  std::unordered_map<InternKey, const detail::FormulaNode*, InternKeyHash> table;
  std::deque<detail::FormulaNode> store;

  const detail::FormulaNode* get(Conn kind, std::string_view name,
                                 const detail::FormulaNode* l, const detail::FormulaNode* r) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(InternKey{kind, l, r, name});
    if (it != table.end()) return it->second;
    detail::FormulaNode n;
    n.kind = kind;
    n.name = std::string(name);
    n.left = l;
    n.right = r;
    switch (kind) {
      case Conn::Atom:
        n.length = 1;
        n.hash = hash_atom(name);
        break;
      case Conn::Bot:
        n.length = 1;
        n.hash = 0x0b07f0c1d2e3a495ull;
        break;
      default:
        n.length = 1 + l->length + r->length;
        n.hash = hash_node(kind, l->hash, r->hash);
        break;
    }
    store.push_back(std::move(n));
    const detail::FormulaNode* p = &store.back();
    table.emplace(InternKey{kind, p->left, p->right, std::string_view(p->name)}, p);
    return p;
  }
};

Interner& interner() {
  static Interner* g = new Interner(); // never destroyed; table owns all nodes
  return *g;
}

bool valid_atom_name(std::string_view s) {
  size_t i = 0;
  if (i < s.size() && s[i] == '_') ++i;
  if (i >= s.size() || s[i] < 'a' || s[i] > 'z') return false;
  for (++i; i < s.size(); ++i) {
    char c = s[i];
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  }
  return true;
}

} // namespace

Formula Formula::atom(std::string_view name) {
  if (!valid_atom_name(name) || name == "bot")
    throw std::invalid_argument("bad atom name: '" + std::string(name) + "'");
  return Formula(interner().get(Conn::Atom, name, nullptr, nullptr));
}

Formula Formula::bot() { return Formula(interner().get(Conn::Bot, {}, nullptr, nullptr)); }

Formula Formula::imp(Formula a, Formula b) {
  return Formula(interner().get(Conn::Imp, {}, a.node_, b.node_));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(interner().get(Conn::And, {}, a.node_, b.node_));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(interner().get(Conn::Or, {}, a.node_, b.node_));
}

const std::string& Formula::atom_name() const {
  if (!is_atom()) throw std::logic_error("atom_name() on non-atom");
  return node_->name;
}

Formula Formula::lhs() const {
  if (!node_->left) throw std::logic_error("lhs() on atomic formula");
  return Formula(node_->left);
}

Formula Formula::rhs() const {
  if (!node_->right) throw std::logic_error("rhs() on atomic formula");
  return Formula(node_->right);
}

int structural_cmp(Formula a, Formula b) {
  if (a == b) return 0;
  if (a.hash() != b.hash()) return a.hash() < b.hash() ? -1 : 1;
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  if (a.kind() == Conn::Atom) return a.atom_name().compare(b.atom_name());
  if (a.kind() == Conn::Bot) return 0;
  if (int c = structural_cmp(a.lhs(), b.lhs())) return c;
  return structural_cmp(a.rhs(), b.rhs());
}

// --- parsing ------------------------------------------------------------

ParseError::ParseError(std::string msg, size_t at, std::string exp)
    : std::runtime_error(std::move(msg)), offset(at), expected(std::move(exp)) {}

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  enum class Tok { Atom, Bot, LParen, RParen, Amp, Pipe, Arrow, End };
  Tok tok = Tok::End;
  std::string_view tok_text;
  size_t tok_at = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& exp) {
    std::ostringstream os;
    os << "syntax error at byte " << tok_at << ": expected " << exp;
    throw ParseError(os.str(), tok_at, exp);
  }

  void next() {
    skip_ws();
    tok_at = pos;
    if (pos >= text.size()) { tok = Tok::End; tok_text = {}; return; }
    char c = text[pos];
    if (c == '(') { tok = Tok::LParen; tok_text = text.substr(pos, 1); ++pos; return; }
    if (c == ')') { tok = Tok::RParen; tok_text = text.substr(pos, 1); ++pos; return; }
    if (c == '&') { tok = Tok::Amp; tok_text = text.substr(pos, 1); ++pos; return; }
    if (c == '-') {
      if (pos + 1 < text.size() && text[pos + 1] == '>') {
        tok = Tok::Arrow; tok_text = text.substr(pos, 2); pos += 2; return;
      }
      fail("'->'");
    }
    if (text.compare(pos, 3, "_|_") == 0) {
      tok = Tok::Bot; tok_text = text.substr(pos, 3); pos += 3; return;
    }
    if (c == '|') { tok = Tok::Pipe; tok_text = text.substr(pos, 1); ++pos; return; }
    if (c == '_' || (c >= 'a' && c <= 'z')) {
      size_t start = pos;
      if (c == '_') ++pos;
      if (pos >= text.size() || text[pos] < 'a' || text[pos] > 'z') {
        tok_at = start;
        fail("atom name ('_' must be followed by a letter)");
      }
      while (pos < text.size()) {
        char d = text[pos];
        if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_') ++pos;
        else break;
      }
      tok_text = text.substr(start, pos - start);
      tok = (tok_text == "bot") ? Tok::Bot : Tok::Atom;
      return;
    }
    fail("a formula token (atom, 'bot', '_|_', '(', ')', '&', '|' or '->')");
  }
};

struct Parser {
  Lexer lx;

  Formula parse_unit() {
    switch (lx.tok) {
      case Lexer::Tok::Atom: {
        Formula f = Formula::atom(lx.tok_text);
        lx.next();
        return f;
      }
      case Lexer::Tok::Bot:
        lx.next();
        return Formula::bot();
      case Lexer::Tok::LParen: {
        lx.next();
        Formula f = parse_imp();
        if (lx.tok != Lexer::Tok::RParen) lx.fail("')'");
        lx.next();
        return f;
      }
      default:
        lx.fail("an atom, 'bot', '_|_' or '('");
    }
  }

  Formula parse_and() {
    Formula f = parse_unit();
    while (lx.tok == Lexer::Tok::Amp) {
      lx.next();
      f = Formula::conj(f, parse_unit());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (lx.tok == Lexer::Tok::Pipe) {
      lx.next();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (lx.tok == Lexer::Tok::Arrow) {
      lx.next();
      return Formula::imp(f, parse_imp());
    }
    return f;
  }
};

} // namespace

Formula parse_formula(std::string_view text) {
  Parser p{Lexer{text}};
  p.lx.next();
  Formula f = p.parse_imp();
  if (p.lx.tok != Lexer::Tok::End) p.lx.fail("end of input");
  return f;
}

// --- printing -----------------------------------------------------------

namespace {

// Child gets parentheses when its connective differs from the parent's, and
// on the non-associative side of a same-connective chain ('->' nests right,
// '&'/'|' nest left).
bool child_needs_parens(Formula child, Conn parent, bool left_side) {
  if (child.is_atomic()) return false;
  if (child.kind() != parent) return true;
  if (parent == Conn::Imp) return left_side;
  return !left_side;
}

void format_rec(Formula f, std::string& out) {
  switch (f.kind()) {
    case Conn::Atom: out += f.atom_name(); return;
    case Conn::Bot: out += "bot"; return;
    default: break;
  }
  const char* op = f.kind() == Conn::Imp ? " -> " : (f.kind() == Conn::And ? " & " : " | ");
  Formula l = f.lhs(), r = f.rhs();
  bool pl = child_needs_parens(l, f.kind(), true);
  bool pr = child_needs_parens(r, f.kind(), false);
  if (pl) out += '(';
  format_rec(l, out);
  if (pl) out += ')';
  out += op;
  if (pr) out += '(';
  format_rec(r, out);
  if (pr) out += ')';
}

} // namespace

std::string format(Formula f) {
  std::string out;
  out.reserve(f.length() * 4);
  format_rec(f, out);
  return out;
}

// --- measures -----------------------------------------------------------

namespace {

void collect_atoms(Formula f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Conn::Atom: out.insert(f.atom_name()); return;
    case Conn::Bot: return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

} // namespace

FormulaMeasure measure(Formula f) {
  FormulaMeasure m;
  m.length = f.length();
  collect_atoms(f, m.atom_set);
  // Every non-Atom node is a connective occurrence (bot is nullary).
  uint32_t atom_occurrences = 0;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (g.is_atom()) ++atom_occurrences;
    else if (!g.is_bot()) {
      stack.push_back(g.lhs());
      stack.push_back(g.rhs());
    }
  }
  m.connective_count = m.length - atom_occurrences;
  return m;
}

FormulaSet subformulas(Formula f) {
  FormulaSet out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!out.insert(g).second) continue;
    if (!g.is_atomic()) {
      stack.push_back(g.lhs());
      stack.push_back(g.rhs());
    }
  }
  return out;
}

FormulaSet semi_subformulas(Formula f) {
  FormulaSet out = subformulas(f);
  std::vector<Formula> work(out.begin(), out.end());
  while (!work.empty()) {
    Formula g = work.back();
    work.pop_back();
    // (a->b)->c in the set forces b->c into the set
    if (g.is_imp() && g.lhs().is_imp()) {
      Formula bc = Formula::imp(g.lhs().rhs(), g.rhs());
      if (out.insert(bc).second) work.push_back(bc);
    }
  }
  return out;
}

// --- classical validity ---------------------------------------------------

bool eval_classical(Formula f, const Assignment& a) {
  switch (f.kind()) {
    case Conn::Atom: {
      auto it = a.atoms.find(f.atom_name());
      if (it == a.atoms.end()) throw std::invalid_argument("assignment misses atom " + f.atom_name());
      return it->second;
    }
    case Conn::Bot:
      return a.bot_as_atom ? a.bot_value : false;
    case Conn::Imp:
      return !eval_classical(f.lhs(), a) || eval_classical(f.rhs(), a);
    case Conn::And:
      return eval_classical(f.lhs(), a) && eval_classical(f.rhs(), a);
    case Conn::Or:
      return eval_classical(f.lhs(), a) || eval_classical(f.rhs(), a);
  }
  throw std::logic_error("unreachable");
}

ClassicalVerdict classical_valid(Formula f, bool bot_as_atom, unsigned max_atoms) {
  std::set<std::string> atom_set;
  collect_atoms(f, atom_set);
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  bool use_bot = bot_as_atom && contains_bot(f);
  unsigned bits = static_cast<unsigned>(atoms.size()) + (use_bot ? 1u : 0u);
  if (bits > max_atoms)
    throw std::invalid_argument("classical_valid: formula exceeds the atom limit");

  Assignment a;
  a.bot_as_atom = bot_as_atom;
  for (uint64_t m = 0; m < (1ull << bits); ++m) {
    for (size_t i = 0; i < atoms.size(); ++i) a.atoms[atoms[i]] = (m >> i) & 1;
    if (use_bot) a.bot_value = (m >> atoms.size()) & 1;
    if (!eval_classical(f, a)) return ClassicalVerdict{false, a};
  }
  return ClassicalVerdict{true, std::nullopt};
}

// --- encodings ------------------------------------------------------------

const ImpEncoding& ImpEncoding::standard() {
  static const ImpEncoding enc{
      [](Formula a, Formula b) {
        return Formula::imp(Formula::imp(a, Formula::imp(b, Formula::bot())), Formula::bot());
      },
      [](Formula a, Formula b) {
        return Formula::imp(Formula::imp(a, Formula::bot()),
                            Formula::imp(Formula::imp(b, Formula::bot()), Formula::bot()));
      }};
  return enc;
}

Formula imp_encode(Formula f, const ImpEncoding& enc) {
  switch (f.kind()) {
    case Conn::Atom:
    case Conn::Bot:
      return f;
    case Conn::Imp:
      return Formula::imp(imp_encode(f.lhs(), enc), imp_encode(f.rhs(), enc));
    case Conn::And:
      return enc.and_rule(imp_encode(f.lhs(), enc), imp_encode(f.rhs(), enc));
    case Conn::Or:
      return enc.or_rule(imp_encode(f.lhs(), enc), imp_encode(f.rhs(), enc));
  }
  throw std::logic_error("unreachable");
}

Formula atomize_bot(Formula f, const std::string& fresh) {
  if (contains_atom(f, fresh))
    throw std::invalid_argument("atomize_bot: name '" + fresh + "' already occurs");
  Formula sub = Formula::atom(fresh);
  std::function<Formula(Formula)> go = [&](Formula g) -> Formula {
    switch (g.kind()) {
      case Conn::Atom: return g;
      case Conn::Bot: return sub;
      case Conn::Imp: return Formula::imp(go(g.lhs()), go(g.rhs()));
      case Conn::And: return Formula::conj(go(g.lhs()), go(g.rhs()));
      case Conn::Or: return Formula::disj(go(g.lhs()), go(g.rhs()));
    }
    throw std::logic_error("unreachable");
  };
  return go(f);
}

bool contains_bot(Formula f) {
  if (f.is_bot()) return true;
  if (f.is_atomic()) return false;
  return contains_bot(f.lhs()) || contains_bot(f.rhs());
}

bool contains_atom(Formula f, const std::string& name) {
  if (f.is_atom()) return f.atom_name() == name;
  if (f.is_bot()) return false;
  return contains_atom(f.lhs(), name) || contains_atom(f.rhs(), name);
}

std::string next_fresh_atom(const std::vector<Formula>& context) {
  std::set<std::string> used;
  for (Formula f : context) collect_atoms(f, used);
  for (unsigned k = 0;; ++k) {
    std::string cand = "_f" + std::to_string(k);
    if (!used.count(cand)) return cand;
  }
}

} // namespace proofbench
