#include "proofbench/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "proofbench/dag.hpp"
#include "proofbench/kripke.hpp"
#include "proofbench/naive_prover.hpp"
#include "proofbench/sc.hpp"
#include "proofbench/sc_prover.hpp"
#include "proofbench/translate.hpp"

namespace proofbench {

namespace {

std::string hash_hex(uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* status_name(ProveStatus s) {
  switch (s) {
    case ProveStatus::Proved: return "proved";
    case ProveStatus::Unprovable: return "unprovable";
    case ProveStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

nlohmann::json config_block() {
  nlohmann::json j;
  j["rule_table_hash"] = hash_hex(rule_table_hash());
  j["budget_multiplier"] = kDefaultBudgetMultiplier;
  return j;
}

bool derivation_uses(const ScDerivation& d, RuleId r) {
  if (d.rule == r) return true;
  for (const auto& p : d.premises)
    if (derivation_uses(p, r)) return true;
  return false;
}

std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

} // namespace

// --- counterexample ---------------------------------------------------------

ExperimentReport counterexample_report() {
  ExperimentReport rep;
  nlohmann::json j;
  j["config"] = config_block();
  std::string text = "counterexample report\n";

  const CalculusProfile& lgmin = CalculusProfile::lg_min();
  const CalculusProfile& lgint = CalculusProfile::lg_int();
  const CalculusProfile& lmimp = CalculusProfile::lm_imp();

  // (a) the conjunction tautology, provable once & rules exist
  Formula fa = parse_formula("(p&q)->p");
  auto ra = prove_sc(fa, lgmin);
  bool a_proved = ra.status == ProveStatus::Proved;
  bool a_sc_valid = false, a_nd_valid = false;
  nlohmann::json ja;
  ja["formula"] = format(fa);
  if (a_proved) {
    a_sc_valid = check_sc(*ra.derivation, lgmin).valid;
    NdDerivation nd = translate_sc_to_nd(*ra.derivation, NdProfile::nm_full());
    a_nd_valid = check_nd(nd, NdProfile::nm_full()).valid && nd.formula == fa &&
                 nd_open_assumptions(nd).empty();
    ja["sequent_derivation"] = sc_to_json(*ra.derivation);
    ja["natural_deduction"] = nd_to_json(nd);
  }
  bool a_pass = a_proved && a_sc_valid && a_nd_valid;
  ja["pass"] = a_pass;
  j["parts"]["a"] = ja;
  text += "a: " + pass_fail(a_pass) +
          "  (p&q)->p proved without the bot axiom; sequent and deduction checks valid\n";

  // (b) its implicational encoding is exhaustively unprovable
  Formula fb = parse_formula("((p->(q->bot))->bot)->p");
  auto rb = prove_sc(fb, lmimp);
  bool b_unprovable = rb.status == ProveStatus::Unprovable;
  bool b_naive = naive_provable(fb);
  auto kb = kripke_refute(fb, KripkeSemantics::Minimal, 3);
  nlohmann::json jb;
  jb["formula"] = format(fb);
  jb["prover_status"] = status_name(rb.status);
  jb["states_searched"] = rb.nodes_expanded;
  jb["naive_prover_agrees"] = !b_naive;
  if (kb.refuted) {
    jb["countermodel"] = kripke_model_to_json(*kb.model);
    jb["countermodel_world"] = kb.world;
  }
  bool b_pass = b_unprovable && !b_naive && kb.refuted;
  jb["pass"] = b_pass;
  j["parts"]["b"] = jb;
  text += "b: " + pass_fail(b_pass) + "  " + format(fb) +
          " unprovable in the implicational profile (" + std::to_string(rb.nodes_expanded) +
          " states searched)";
  if (kb.refuted) text += "; countermodel " + format_kripke_model(*kb.model);
  text += "\n";

  // (c) swap bot for a fresh atom: not even classically valid
  Formula fc = parse_formula("((p->(q->r))->r)->p");
  auto cv = classical_valid(fc, false);
  bool c_found = !cv.valid && cv.countermodel.has_value();
  bool c_shape = false;
  nlohmann::json jc;
  jc["formula"] = format(fc);
  if (c_found) {
    const auto& atoms = cv.countermodel->atoms;
    auto ip = atoms.find("p");
    auto ir = atoms.find("r");
    c_shape = ip != atoms.end() && ir != atoms.end() && !ip->second && ir->second;
    nlohmann::json cm;
    for (const auto& [name, value] : atoms) cm[name] = value;
    jc["countermodel"] = cm;
  }
  bool c_pass = c_found && c_shape;
  jc["pass"] = c_pass;
  j["parts"]["c"] = jc;
  text += "c: " + pass_fail(c_pass) + "  classical countermodel for " + format(fc) + ":";
  if (c_found)
    for (const auto& [name, value] : cv.countermodel->atoms)
      text += " " + name + "=" + (value ? "true" : "false");
  text += "\n";

  // (d) the swap ties them together: bot behaves as an atom here
  Formula swapped = atomize_bot(fb, "r");
  bool d_matches = swapped == fc;
  auto rswap = prove_sc(fc, lmimp);
  bool d_invariant =
      (rswap.status == ProveStatus::Proved) == (rb.status == ProveStatus::Proved);
  bool d_pass = d_matches && d_invariant && a_pass && b_pass && c_pass;
  nlohmann::json jd;
  jd["atomization_equals_witness"] = d_matches;
  jd["swap_preserves_verdict"] = d_invariant;
  jd["swapped_status"] = status_name(rswap.status);
  jd["pass"] = d_pass;
  j["parts"]["d"] = jd;
  text += "d: " + pass_fail(d_pass) +
          "  swapping bot for r yields the witness and leaves the verdict unchanged\n";

  // how much does the bot axiom buy? nothing for this formula: it has an
  // intuitionistic countermodel too, so the report states the verdict
  // rather than assuming explosion settles it
  auto rint = prove_sc(fb, lgint);
  auto ki = kripke_refute(fb, KripkeSemantics::Intuitionistic, 3);
  nlohmann::json jn;
  jn["bot_axiom_status"] = status_name(rint.status);
  if (ki.refuted) {
    jn["intuitionistic_countermodel"] = kripke_model_to_json(*ki.model);
    jn["intuitionistic_countermodel_world"] = ki.world;
  }
  j["explosion_note"] = jn;
  text += "note: with the bot axiom enabled the encoding is " + std::string(status_name(rint.status));
  if (ki.refuted) text += "; intuitionistic countermodel " + format_kripke_model(*ki.model);
  text += "\n";

  rep.passed = a_pass && b_pass && c_pass && d_pass;
  j["passed"] = rep.passed;
  text += "result: " + pass_fail(rep.passed) + "\n";
  rep.json = std::move(j);
  rep.text = std::move(text);
  return rep;
}

// --- agreement sweep --------------------------------------------------------

namespace {

// Rooted models up to a world bound, with per-model lookup tables so forcing
// masks stream through formulas bottom-up (one byte per model per formula).
struct ModelLibrary {
  std::vector<KripkeModel> models;
  std::vector<std::vector<uint8_t>> imp_tab; // [model][bad mask] -> forcing mask
  std::vector<uint8_t> full;
  std::vector<std::vector<uint8_t>> atom_rows; // parallel to atoms
  std::vector<uint8_t> bot_row;
  std::vector<std::string> atoms; // sorted
};

ModelLibrary build_library(std::vector<std::string> atoms, uint32_t max_worlds) {
  ModelLibrary lib;
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  lib.atoms = atoms;
  uint32_t slots = static_cast<uint32_t>(atoms.size()) + 1; // bot is the last slot
  for (uint32_t n = 1; n <= max_worlds; ++n)
    for (const Poset& p : rooted_posets(n))
      for_each_canonical_valuation(p, slots, [&](const std::vector<uint32_t>& masks) {
        KripkeModel m;
        m.worlds = n;
        m.up = p.up;
        for (size_t i = 0; i < atoms.size(); ++i)
          m.val.emplace_back(atoms[i], masks[i]);
        m.bot_mask = masks[atoms.size()];
        lib.models.push_back(std::move(m));
        return true;
      });

  size_t count = lib.models.size();
  lib.imp_tab.reserve(count);
  for (const KripkeModel& m : lib.models) {
    uint32_t full = (1u << m.worlds) - 1;
    lib.full.push_back(static_cast<uint8_t>(full));
    std::vector<uint8_t> tab(full + 1, 0);
    for (uint32_t bad = 0; bad <= full; ++bad) {
      uint8_t r = 0;
      for (uint32_t w = 0; w < m.worlds; ++w)
        if ((m.up[w] & bad) == 0) r |= static_cast<uint8_t>(1u << w);
      tab[bad] = r;
    }
    lib.imp_tab.push_back(std::move(tab));
  }
  lib.atom_rows.assign(atoms.size(), std::vector<uint8_t>(count, 0));
  lib.bot_row.assign(count, 0);
  for (size_t mi = 0; mi < count; ++mi) {
    for (size_t ai = 0; ai < atoms.size(); ++ai)
      lib.atom_rows[ai][mi] = static_cast<uint8_t>(lib.models[mi].val[ai].second);
    lib.bot_row[mi] = static_cast<uint8_t>(lib.models[mi].bot_mask);
  }
  return lib;
}

// Forcing rows for every formula up to the second-highest level; the top
// level is recombined from child rows on the fly and never stored.
struct RowStore {
  size_t width = 0;
  std::vector<uint8_t> arena;
  std::unordered_map<const void*, size_t> offsets;

  const uint8_t* find(Formula f) const {
    auto it = offsets.find(f.raw());
    return it == offsets.end() ? nullptr : arena.data() + it->second;
  }
  void add(Formula f, const uint8_t* row) {
    size_t off = arena.size();
    arena.insert(arena.end(), row, row + width);
    offsets.emplace(f.raw(), off);
  }
};

} // namespace

ExperimentReport agreement_sweep(const SweepOptions& opt) {
  if (opt.max_connectives > 9)
    throw std::invalid_argument("agreement_sweep: max_connectives larger than 9");
  std::vector<std::string> atoms = opt.atoms;
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  if (atoms.empty()) throw std::invalid_argument("agreement_sweep: empty atom set");

  std::string swap_atom;
  for (const char* cand : {"r", "s", "t", "u", "v", "w"})
    if (std::find(atoms.begin(), atoms.end(), cand) == atoms.end()) {
      swap_atom = cand;
      break;
    }
  if (swap_atom.empty()) throw std::invalid_argument("agreement_sweep: no free atom for the swap");

  ModelLibrary lib = build_library(atoms, opt.kripke_library_worlds);
  const size_t width = lib.models.size();
  const CalculusProfile& lmimp = CalculusProfile::lm_imp();
  const NdProfile& nmimp = NdProfile::nm_imp();
  NaiveCache ncache;

  uint64_t formulas = 0, provable = 0, disagreements = 0, undecided = 0;
  uint64_t refuted_by_library = 0, refuted_escalated = 0, unprovable_unrefuted = 0;
  uint64_t atom_swap_checked = 0, atom_swap_violations = 0;
  uint64_t audit_failures = 0, size_bound_violations = 0;
  uint64_t translation_failures = 0, envelope_violations = 0;
  uint64_t roundtrip_failures = 0, monotonic_failures = 0, dag_check_failures = 0;
  uint64_t soundness_violations = 0, budget_exhausted = 0, cache_resets = 0;
  uint64_t prover_states = 0;
  double worst_height_ratio = 0.0;
  std::vector<std::string> ex_disagree, ex_unrefuted, ex_failure;
  auto note = [](std::vector<std::string>& where, Formula f, const char* what) {
    if (where.size() < 5) where.push_back(std::string(what) + ": " + format(f));
  };

  RowStore rows;
  rows.width = width;
  std::vector<uint8_t> tmp(width);
  auto imp_row = [&](const uint8_t* a, const uint8_t* b, uint8_t* out) {
    for (size_t m = 0; m < width; ++m) out[m] = lib.imp_tab[m][(a[m] & ~b[m]) & lib.full[m]];
  };

  auto process = [&](Formula f, const uint8_t* row) {
    ++formulas;
    {
      uint64_t len = f.length();
      if (semi_subformulas(f).size() > len * len) {
        ++size_bound_violations;
        note(ex_failure, f, "semi-subformula size bound");
      }
    }
    auto pr = prove_sc(f, lmimp);
    prover_states += pr.nodes_expanded;
    if (pr.status == ProveStatus::BudgetExhausted) ++budget_exhausted;
    bool lm_proved = pr.status == ProveStatus::Proved;
    bool lm_decided = pr.status != ProveStatus::BudgetExhausted;
    bool nv = naive_provable(f, &ncache);
    if (ncache.verdicts.size() > 6000000) {
      ncache.verdicts.clear();
      ++cache_resets;
    }
    bool refuted = false;
    for (size_t m = 0; m < width; ++m)
      if (!(row[m] & 1u)) {
        refuted = true;
        break;
      }
    if ((lm_decided && lm_proved != nv) || (refuted && (lm_proved || nv))) {
      ++disagreements;
      note(ex_disagree, f, "disagreement");
    }
    if (!lm_decided) ++undecided; // naive always decides; defensive
    if (refuted) {
      ++refuted_by_library;
    } else if (!lm_proved && !nv) {
      auto kr = kripke_refute_rooted(f, KripkeSemantics::Minimal, opt.kripke_library_worlds + 1,
                                     opt.kripke_escalate_worlds);
      if (kr.refuted) {
        ++refuted_escalated;
      } else {
        ++unprovable_unrefuted;
        note(ex_unrefuted, f, "no countermodel found");
      }
    }

    Formula swapped = contains_bot(f) ? atomize_bot(f, swap_atom) : f;
    if (!(swapped == f)) {
      ++atom_swap_checked;
      bool lm_swapped = prove_sc(swapped, lmimp).status == ProveStatus::Proved;
      if (lm_swapped != lm_proved) {
        ++atom_swap_violations;
        note(ex_failure, f, "atom swap changed the verdict");
      }
    }

    if (!lm_proved) return;
    ++provable;
    const ScDerivation& d = *pr.derivation;
    if (!semi_subformula_audit(d, f).holds) {
      ++audit_failures;
      note(ex_failure, f, "audit failure");
    }
    NdDerivation nd = translate_sc_to_nd(d, nmimp);
    if (!check_nd(nd, nmimp).valid || !(nd.formula == f) || !nd_open_assumptions(nd).empty()) {
      ++translation_failures;
      note(ex_failure, f, "translation failure");
      return;
    }
    ScMetrics sm = sc_metrics(d);
    NdMetrics nm = nd_metrics(nd);
    uint64_t envelope = uint64_t{opt.height_envelope_k} * sm.height * sm.height;
    if (nm.height > envelope) {
      ++envelope_violations;
      note(ex_failure, f, "height envelope exceeded");
    }
    if (sm.height > 0)
      worst_height_ratio = std::max(
          worst_height_ratio, double(nm.height) / (double(sm.height) * double(sm.height)));
    ProofDag l1 = compress(nd, CompressLevel::L1);
    ProofDag l2 = compress(nd, CompressLevel::L2);
    if (!(unfold(l1) == nd)) {
      ++roundtrip_failures;
      note(ex_failure, f, "sharing round trip");
    }
    if (!(dag_size(l2) <= dag_size(l1) && dag_size(l1) <= nm.size)) {
      ++monotonic_failures;
      note(ex_failure, f, "size monotonicity");
    }
    if (!check_dag(l1, nmimp).valid || !check_dag(l2, nmimp).valid) {
      ++dag_check_failures;
      note(ex_failure, f, "dag check");
    }
    if (!classical_valid(swapped, false).valid) {
      ++soundness_violations;
      note(ex_failure, f, "classically invalid after atomization");
    }
  };

  std::vector<std::vector<Formula>> levels(opt.max_connectives + 1);
  for (const auto& a : atoms) levels[0].push_back(Formula::atom(a));
  levels[0].push_back(Formula::bot());
  for (Formula f : levels[0]) {
    const std::vector<uint8_t>& src =
        f.is_bot() ? lib.bot_row
                   : lib.atom_rows[std::lower_bound(atoms.begin(), atoms.end(), f.atom_name()) -
                                   atoms.begin()];
    rows.add(f, src.data());
  }

  for (uint32_t k = 0; k <= opt.max_connectives; ++k) {
    if (k > 0) {
      size_t total = 0;
      for (uint32_t i = 0; i < k; ++i) total += levels[i].size() * levels[k - 1 - i].size();
      levels[k].reserve(total);
      for (uint32_t i = 0; i < k; ++i)
        for (Formula a : levels[i])
          for (Formula b : levels[k - 1 - i]) {
            Formula f = Formula::imp(a, b);
            levels[k].push_back(f);
            if (k < opt.max_connectives) {
              imp_row(rows.find(a), rows.find(b), tmp.data());
              rows.add(f, tmp.data());
            }
          }
    }
    // enumeration identity: connective count, then canonical-form order
    const auto& lvl = levels[k];
    std::vector<uint32_t> order(lvl.size());
    std::iota(order.begin(), order.end(), 0u);
    {
      std::vector<std::string> keys(lvl.size());
      for (size_t i = 0; i < lvl.size(); ++i) keys[i] = format(lvl[i]);
      std::sort(order.begin(), order.end(),
                [&](uint32_t x, uint32_t y) { return keys[x] < keys[y]; });
    }
    for (uint32_t i : order) {
      Formula f = lvl[i];
      const uint8_t* row = rows.find(f);
      if (!row) {
        imp_row(rows.find(f.lhs()), rows.find(f.rhs()), tmp.data());
        row = tmp.data();
      }
      process(f, row);
    }
  }

  NaiveCache hcache;
  auto highlight = [&](Formula f) {
    nlohmann::json h;
    h["formula"] = format(f);
    h["prover"] = status_name(prove_sc(f, lmimp).status);
    h["naive"] = naive_provable(f, &hcache) ? "proved" : "unprovable";
    auto kr = kripke_refute_rooted(f, KripkeSemantics::Minimal, 1, opt.kripke_library_worlds);
    h["kripke"] = kr.refuted ? "refuted" : "no countermodel within bound";
    return h;
  };

  ExperimentReport rep;
  rep.passed = disagreements == 0 && undecided == 0 && atom_swap_violations == 0 &&
               audit_failures == 0 && size_bound_violations == 0 && translation_failures == 0 &&
               envelope_violations == 0 && roundtrip_failures == 0 && monotonic_failures == 0 &&
               dag_check_failures == 0 && soundness_violations == 0;

  nlohmann::json j;
  j["config"] = config_block();
  j["config"]["max_connectives"] = opt.max_connectives;
  j["config"]["atoms"] = atoms;
  j["config"]["swap_atom"] = swap_atom;
  j["config"]["kripke_library_worlds"] = opt.kripke_library_worlds;
  j["config"]["kripke_library_models"] = width;
  j["config"]["kripke_escalate_worlds"] = opt.kripke_escalate_worlds;
  j["config"]["height_envelope_k"] = opt.height_envelope_k;
  nlohmann::json t;
  t["formulas"] = formulas;
  t["provable"] = provable;
  t["disagreements"] = disagreements;
  t["undecided"] = undecided;
  t["refuted_by_library"] = refuted_by_library;
  t["refuted_escalated"] = refuted_escalated;
  t["unprovable_unrefuted"] = unprovable_unrefuted;
  t["atom_swap_checked"] = atom_swap_checked;
  t["atom_swap_violations"] = atom_swap_violations;
  t["audit_failures"] = audit_failures;
  t["size_bound_violations"] = size_bound_violations;
  t["translation_failures"] = translation_failures;
  t["envelope_violations"] = envelope_violations;
  t["worst_height_ratio"] = worst_height_ratio;
  t["roundtrip_failures"] = roundtrip_failures;
  t["monotonic_failures"] = monotonic_failures;
  t["dag_check_failures"] = dag_check_failures;
  t["soundness_violations"] = soundness_violations;
  t["budget_exhausted"] = budget_exhausted;
  t["prover_states"] = prover_states;
  t["naive_cache_hits"] = ncache.hits;
  t["naive_cache_misses"] = ncache.misses;
  t["naive_cache_resets"] = cache_resets;
  j["totals"] = t;
  j["highlights"] = nlohmann::json::array(
      {highlight(parse_formula("p->p")), highlight(parse_formula("((p->(q->bot))->bot)->p"))});
  nlohmann::json ex;
  ex["disagreements"] = ex_disagree;
  ex["unrefuted_unprovable"] = ex_unrefuted;
  ex["failures"] = ex_failure;
  j["examples"] = ex;
  j["passed"] = rep.passed;
  rep.json = j;

  std::string atoms_line;
  for (const auto& a : atoms) atoms_line += a + ",";
  atoms_line += "bot";
  std::string text = "agreement sweep\n";
  text += "atoms {" + atoms_line + "}, arrows <= " + std::to_string(opt.max_connectives) +
          ", library " + std::to_string(width) + " rooted models (<= " +
          std::to_string(opt.kripke_library_worlds) + " worlds)\n";
  text += "formulas " + std::to_string(formulas) + ", provable " + std::to_string(provable) +
          ", refuted by library " + std::to_string(refuted_by_library) + ", escalated " +
          std::to_string(refuted_escalated) + ", unrefuted unprovable " +
          std::to_string(unprovable_unrefuted) + "\n";
  text += "disagreements " + std::to_string(disagreements) + ", undecided " +
          std::to_string(undecided) + "\n";
  text += "atom swap: checked " + std::to_string(atom_swap_checked) + ", violations " +
          std::to_string(atom_swap_violations) + "\n";
  text += "audit failures " + std::to_string(audit_failures) + ", size-bound violations " +
          std::to_string(size_bound_violations) + "\n";
  text += "translation failures " + std::to_string(translation_failures) +
          ", height envelope (k=" + std::to_string(opt.height_envelope_k) + ") violations " +
          std::to_string(envelope_violations) + "\n";
  text += "sharing: round-trip failures " + std::to_string(roundtrip_failures) +
          ", monotonicity failures " + std::to_string(monotonic_failures) + ", dag check failures " +
          std::to_string(dag_check_failures) + "\n";
  text += "classical soundness violations " + std::to_string(soundness_violations) + "\n";
  text += "result: " + pass_fail(rep.passed) + "\n";
  rep.text = text;
  return rep;
}

// --- growth -----------------------------------------------------------------

namespace {

std::optional<double> loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  size_t n = xs.size();
  if (n < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    double lx = std::log(xs[i]);
    double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double denom = double(n) * sxx - sx * sx;
  if (denom < 1e-9) return std::nullopt;
  return (double(n) * sxy - sx * sy) / denom;
}

std::string slope_str(const std::optional<double>& s) {
  if (!s) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *s);
  return buf;
}

} // namespace

ExperimentReport growth_report(const std::string& family, uint32_t max_index) {
  std::string fam = family;
  std::transform(fam.begin(), fam.end(), fam.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::function<Formula(uint32_t)> gen;
  if (fam == "nested-k") {
    gen = [](uint32_t n) {
      Formula f = Formula::atom("a1");
      for (uint32_t i = n; i >= 1; --i) f = Formula::imp(Formula::atom("a" + std::to_string(i)), f);
      return f;
    };
  } else if (fam == "reuse-heavy") {
    gen = [](uint32_t n) {
      Formula p = Formula::atom("p");
      Formula ante = Formula::atom("q");
      for (uint32_t i = 0; i < n; ++i) ante = Formula::imp(p, ante);
      return Formula::imp(ante, Formula::imp(p, Formula::atom("q")));
    };
  } else {
    throw std::invalid_argument("growth_report: unknown family: " + family);
  }
  if (max_index == 0) throw std::invalid_argument("growth_report: max_index must be positive");

  struct Row {
    uint32_t index, rho, sc_size, sc_height, tree_size, tree_height, l1, l2, foundation;
  };
  std::vector<Row> table;
  bool checks_ok = true;
  bool truncated = false;
  std::string trunc_note;
  const CalculusProfile& lmimp = CalculusProfile::lm_imp();
  const NdProfile& nmimp = NdProfile::nm_imp();

  for (uint32_t n = 1; n <= max_index; ++n) {
    Formula f = gen(n);
    auto pr = prove_sc(f, lmimp);
    if (pr.status != ProveStatus::Proved) {
      truncated = true;
      trunc_note = "search gave " + std::string(status_name(pr.status)) + " at index " +
                   std::to_string(n) + "; table truncated";
      break;
    }
    NdDerivation nd = translate_sc_to_nd(*pr.derivation, nmimp);
    ProofDag l1 = compress(nd, CompressLevel::L1);
    ProofDag l2 = compress(nd, CompressLevel::L2);
    if (!check_nd(nd, nmimp).valid || !check_dag(l1, nmimp).valid ||
        !check_dag(l2, nmimp).valid || !(unfold(l1) == nd))
      checks_ok = false;
    ScMetrics sm = sc_metrics(*pr.derivation);
    NdMetrics nm = nd_metrics(nd);
    table.push_back(Row{n, f.length(), sm.size, sm.height, nm.size, nm.height, dag_size(l1),
                        dag_size(l2), nm.foundation});
  }

  std::vector<double> xs, tree_ys, l1_ys, l2_ys;
  for (const Row& r : table) {
    xs.push_back(r.rho);
    tree_ys.push_back(r.tree_size);
    l1_ys.push_back(r.l1);
    l2_ys.push_back(r.l2);
  }
  auto tree_slope = loglog_slope(xs, tree_ys);
  auto l1_slope = loglog_slope(xs, l1_ys);
  auto l2_slope = loglog_slope(xs, l2_ys);

  std::string csv = "index,rho_length,sc_size,sc_height,tree_size,tree_height,l1_size,l2_size,foundation\n";
  for (const Row& r : table) {
    csv += std::to_string(r.index) + "," + std::to_string(r.rho) + "," + std::to_string(r.sc_size) +
           "," + std::to_string(r.sc_height) + "," + std::to_string(r.tree_size) + "," +
           std::to_string(r.tree_height) + "," + std::to_string(r.l1) + "," + std::to_string(r.l2) +
           "," + std::to_string(r.foundation) + "\n";
  }

  ExperimentReport rep;
  rep.passed = checks_ok && !table.empty();
  nlohmann::json j;
  j["config"] = config_block();
  j["config"]["family"] = fam;
  j["config"]["max_index"] = max_index;
  auto rows_json = nlohmann::json::array();
  for (const Row& r : table)
    rows_json.push_back({{"index", r.index},
                         {"rho_length", r.rho},
                         {"sc_size", r.sc_size},
                         {"sc_height", r.sc_height},
                         {"tree_size", r.tree_size},
                         {"tree_height", r.tree_height},
                         {"l1_size", r.l1},
                         {"l2_size", r.l2},
                         {"foundation", r.foundation}});
  j["rows"] = rows_json;
  nlohmann::json fit;
  fit["tree_size_slope"] = tree_slope ? nlohmann::json(*tree_slope) : nlohmann::json();
  fit["l1_size_slope"] = l1_slope ? nlohmann::json(*l1_slope) : nlohmann::json();
  fit["l2_size_slope"] = l2_slope ? nlohmann::json(*l2_slope) : nlohmann::json();
  j["fit"] = fit;
  j["truncated"] = truncated;
  if (truncated) j["truncation_note"] = trunc_note;
  j["passed"] = rep.passed;
  rep.json = j;
  rep.csv = csv;

  std::string text = "growth report, family " + fam + ", indices 1.." +
                     std::to_string(max_index) + "\n";
  text += "instances " + std::to_string(table.size());
  if (!table.empty()) {
    const Row& last = table.back();
    text += ", largest |rho| " + std::to_string(last.rho) + " (tree " +
            std::to_string(last.tree_size) + ", shared " + std::to_string(last.l1) + "/" +
            std::to_string(last.l2) + ")";
  }
  text += "\n";
  text += "log-log slopes vs |rho|: tree " + slope_str(tree_slope) + ", shared " +
          slope_str(l1_slope) + ", merged " + slope_str(l2_slope) + "\n";
  if (truncated) text += "note: " + trunc_note + "\n";
  text += "result: " + pass_fail(rep.passed) + "\n";
  rep.text = text;
  return rep;
}

// --- fresh-atom audit demo ----------------------------------------------------

ExperimentReport semi_subformula_violation_demo() {
  ExperimentReport rep;
  Formula goal = parse_formula("((p|q)->r)->(p->r)");
  const CalculusProfile& lgmin = CalculusProfile::lg_min();
  auto pr = prove_sc(goal, lgmin);
  bool proved = pr.status == ProveStatus::Proved;
  bool sc_valid = false, uses_fresh_rule = false;
  AuditResult audit;
  nlohmann::json j;
  j["config"] = config_block();
  j["goal"] = format(goal);
  if (proved) {
    sc_valid = check_sc(*pr.derivation, lgmin).valid;
    uses_fresh_rule = derivation_uses(*pr.derivation, RuleId::GEImpOr);
    audit = semi_subformula_audit(*pr.derivation, goal);
    j["derivation"] = sc_to_json(*pr.derivation);
  }

  std::vector<std::string> violating;
  bool all_mention_fresh = !audit.violations.empty();
  for (const auto& v : audit.violations) {
    violating.push_back(format(v.formula));
    bool mentions = false;
    for (const auto& name : measure(v.formula).atom_set)
      if (name.rfind("_f", 0) == 0) mentions = true;
    all_mention_fresh = all_mention_fresh && mentions;
  }

  Formula control = parse_formula("p->(q->p)");
  auto pc = prove_sc(control, CalculusProfile::lm_imp());
  bool control_ok = pc.status == ProveStatus::Proved &&
                    semi_subformula_audit(*pc.derivation, control).holds;

  rep.passed = proved && sc_valid && uses_fresh_rule && !audit.holds && all_mention_fresh &&
               control_ok;
  j["derivation_checked"] = sc_valid;
  j["uses_fresh_atom_rule"] = uses_fresh_rule;
  j["audit_holds"] = audit.holds;
  j["violations"] = violating;
  j["control"] = {{"formula", format(control)}, {"audit_holds", control_ok}};
  j["passed"] = rep.passed;
  rep.json = j;

  std::string text = "fresh-atom audit demo\n";
  text += "goal " + format(goal) + ": " +
          (proved ? std::string("proved") : std::string(status_name(pr.status))) +
          (sc_valid ? ", derivation checked" : "") +
          (uses_fresh_rule ? ", uses the fresh-atom rule" : "") + "\n";
  text += "audit: " + std::to_string(violating.size()) + " formulas outside the semi-subformula closure:";
  for (const auto& s : violating) text += " " + s;
  text += "\n";
  text += "control " + format(control) + ": audit " +
          (control_ok ? std::string("holds") : std::string("fails")) + "\n";
  text += "result: " + pass_fail(rep.passed) + "\n";
  rep.text = text;
  return rep;
}

} // namespace proofbench
