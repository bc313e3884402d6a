#include "proofbench/sequent.hpp"

#include <algorithm>

namespace proofbench {

Sequent::Sequent(std::vector<Formula> ants, Formula c)
    : antecedents(std::move(ants)), consequent(c) {
  std::sort(antecedents.begin(), antecedents.end(), FormulaLess{});
}

bool Sequent::contains(Formula f) const {
  return std::binary_search(antecedents.begin(), antecedents.end(), f, FormulaLess{});
}

size_t Sequent::count(Formula f) const {
  auto [lo, hi] = std::equal_range(antecedents.begin(), antecedents.end(), f, FormulaLess{});
  return static_cast<size_t>(hi - lo);
}

Sequent Sequent::with(Formula f) const {
  std::vector<Formula> v = antecedents;
  v.insert(std::upper_bound(v.begin(), v.end(), f, FormulaLess{}), f);
  return Sequent{std::move(v), consequent};
}

Sequent Sequent::with(Formula f, Formula g) const { return with(f).with(g); }

Sequent Sequent::with3(Formula f, Formula g, Formula h) const { return with(f).with(g).with(h); }

Sequent Sequent::without(Formula f) const {
  std::vector<Formula> v = antecedents;
  auto it = std::lower_bound(v.begin(), v.end(), f, FormulaLess{});
  if (it == v.end() || *it != f)
    throw std::invalid_argument("sequent: antecedent not present: " + format(f));
  v.erase(it);
  return Sequent{std::move(v), consequent};
}

Sequent Sequent::replace_consequent(Formula c) const {
  Sequent s = *this;
  s.consequent = c;
  return s;
}

bool Sequent::operator==(const Sequent& o) const {
  return consequent == o.consequent && antecedents == o.antecedents;
}

int sequent_cmp(const Sequent& a, const Sequent& b) {
  if (int c = structural_cmp(a.consequent, b.consequent)) return c;
  if (a.antecedents.size() != b.antecedents.size())
    return a.antecedents.size() < b.antecedents.size() ? -1 : 1;
  for (size_t i = 0; i < a.antecedents.size(); ++i)
    if (int c = structural_cmp(a.antecedents[i], b.antecedents[i])) return c;
  return 0;
}

uint32_t sequent_length(const Sequent& s) {
  uint32_t n = s.consequent.length();
  for (Formula f : s.antecedents) n += f.length();
  return n;
}

std::vector<Formula> sequent_members(const Sequent& s) {
  std::vector<Formula> v = s.antecedents;
  v.insert(std::upper_bound(v.begin(), v.end(), s.consequent, FormulaLess{}), s.consequent);
  return v;
}

uint64_t sequent_hash(const Sequent& s) {
  uint64_t h = s.consequent.hash() ^ 0x2545f4914f6cdd1dull;
  for (Formula f : s.antecedents) h = (h * 0x100000001b3ull) ^ f.hash();
  return h;
}

std::string format(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.antecedents.size(); ++i) {
    if (i) out += ", ";
    out += format(s.antecedents[i]);
  }
  if (!s.antecedents.empty()) out += ' ';
  out += "=> ";
  out += format(s.consequent);
  return out;
}

} // namespace proofbench
