#include "proofbench/kripke.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace proofbench {

// --- poset enumeration ----------------------------------------------------

namespace {

// Candidates are strict orders drawn upper-triangular (i < j as indices
// whenever i < j in the order); every finite order has a linear extension,
// so every isomorphism class shows up. Dedup key: the reflexive relation
// matrix packed into n*n bits, minimized over all n! relabelings.
uint64_t canonical_key(const Poset& p) {
  std::vector<uint8_t> perm(p.n);
  std::iota(perm.begin(), perm.end(), uint8_t{0});
  uint64_t best = ~uint64_t{0};
  do {
    uint64_t key = 0;
    for (uint32_t w = 0; w < p.n; ++w)
      for (uint32_t v = 0; v < p.n; ++v)
        if ((p.up[w] >> v) & 1u) key |= uint64_t{1} << (perm[w] * p.n + perm[v]);
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

} // namespace

const std::vector<Poset>& posets(uint32_t n) {
  if (n == 0 || n > 6)
    throw std::invalid_argument("posets: supported world counts are 1..6");
  static std::vector<std::vector<Poset>> cache(7);
  auto& slot = cache[n];
  if (!slot.empty()) return slot;

  uint32_t pidx[6][6] = {};
  uint32_t npairs = 0;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j) pidx[i][j] = npairs++;

  std::set<uint64_t> seen;
  for (uint32_t cand = 0; cand < (1u << npairs); ++cand) {
    auto rel = [&](uint32_t i, uint32_t j) { return (cand >> pidx[i][j]) & 1u; };
    bool transitive = true;
    for (uint32_t i = 0; i < n && transitive; ++i)
      for (uint32_t j = i + 1; j < n && transitive; ++j)
        for (uint32_t k = j + 1; k < n && transitive; ++k)
          if (rel(i, j) && rel(j, k) && !rel(i, k)) transitive = false;
    if (!transitive) continue;

    Poset p;
    p.n = n;
    p.up.assign(n, 0);
    for (uint32_t w = 0; w < n; ++w) {
      p.up[w] = 1u << w;
      for (uint32_t v = w + 1; v < n; ++v)
        if (rel(w, v)) p.up[w] |= 1u << v;
    }
    if (seen.insert(canonical_key(p)).second) slot.push_back(std::move(p));
  }
  return slot;
}

const std::vector<Poset>& rooted_posets(uint32_t n) {
  if (n == 0 || n > 7)
    throw std::invalid_argument("rooted_posets: supported world counts are 1..7");
  static std::vector<std::vector<Poset>> cache(8);
  auto& slot = cache[n];
  if (!slot.empty()) return slot;
  if (n == 1) {
    slot.push_back(Poset{1, {1u}});
    return slot;
  }
  // Rooted orders on n worlds are orders on n-1 worlds plus a new least
  // world 0; isomorphisms respect the least element, so classes carry over.
  for (const Poset& p : posets(n - 1)) {
    Poset q;
    q.n = n;
    q.up.assign(n, 0);
    q.up[0] = (1u << n) - 1;
    for (uint32_t w = 0; w < p.n; ++w) q.up[w + 1] = p.up[w] << 1;
    slot.push_back(std::move(q));
  }
  return slot;
}

std::vector<uint32_t> upsets(const Poset& p) {
  uint32_t full = (1u << p.n) - 1;
  std::vector<uint32_t> out;
  for (uint32_t m = 0; m <= full; ++m) {
    bool closed = true;
    for (uint32_t w = 0; w < p.n && closed; ++w)
      if ((m >> w) & 1u) closed = (p.up[w] & ~m) == 0;
    if (closed) out.push_back(m);
  }
  return out;
}

std::vector<std::vector<uint8_t>> poset_automorphisms(const Poset& p) {
  std::vector<uint8_t> perm(p.n);
  std::iota(perm.begin(), perm.end(), uint8_t{0});
  std::vector<std::vector<uint8_t>> out;
  do {
    bool ok = true;
    for (uint32_t w = 0; w < p.n && ok; ++w) {
      uint32_t image = 0;
      for (uint32_t v = 0; v < p.n; ++v)
        if ((p.up[w] >> v) & 1u) image |= 1u << perm[v];
      ok = image == p.up[perm[w]];
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void for_each_canonical_valuation(const Poset& p, uint32_t slots,
                                  const std::function<bool(const std::vector<uint32_t>&)>& fn) {
  const std::vector<uint32_t> ups = upsets(p);
  std::vector<std::vector<uint8_t>> perms;
  for (auto& a : poset_automorphisms(p)) {
    bool identity = true;
    for (uint32_t w = 0; w < p.n; ++w)
      if (a[w] != w) { identity = false; break; }
    if (!identity) perms.push_back(std::move(a));
  }

  std::vector<uint32_t> masks(slots, 0);
  if (slots == 0) {
    fn(masks);
    return;
  }
  auto apply = [&](const std::vector<uint8_t>& perm, uint32_t mask) {
    uint32_t r = 0;
    for (uint32_t w = 0; w < p.n; ++w)
      if ((mask >> w) & 1u) r |= 1u << perm[w];
    return r;
  };

  std::vector<size_t> idx(slots, 0);
  while (true) {
    for (uint32_t i = 0; i < slots; ++i) masks[i] = ups[idx[i]];
    // Keep only the lexicographically least tuple of each orbit (slot 0
    // most significant); the odometer emits tuples in ascending order, so
    // each orbit still surfaces exactly once and as early as possible.
    bool canonical = true;
    for (const auto& perm : perms) {
      for (uint32_t i = 0; i < slots; ++i) {
        uint32_t pm = apply(perm, masks[i]);
        if (pm < masks[i]) { canonical = false; break; }
        if (pm > masks[i]) break;
      }
      if (!canonical) break;
    }
    if (canonical && !fn(masks)) return;

    uint32_t k = slots - 1;
    while (true) {
      if (++idx[k] < ups.size()) break;
      idx[k] = 0;
      if (k == 0) return;
      --k;
    }
  }
}

// --- forcing --------------------------------------------------------------

uint32_t KripkeModel::atom_mask(const std::string& name) const {
  auto it = std::lower_bound(val.begin(), val.end(), name,
                             [](const auto& pr, const std::string& n) { return pr.first < n; });
  if (it != val.end() && it->first == name) return it->second;
  return 0; // unvalued atoms hold nowhere
}

namespace {

struct Forcer {
  const KripkeModel& m;
  std::unordered_map<const void*, uint32_t> memo;

  uint32_t get(Formula f) {
    auto it = memo.find(f.raw());
    if (it != memo.end()) return it->second;
    uint32_t r = 0;
    switch (f.kind()) {
      case Conn::Atom: r = m.atom_mask(f.atom_name()); break;
      case Conn::Bot: r = m.bot_mask; break;
      case Conn::And: r = get(f.lhs()) & get(f.rhs()); break;
      case Conn::Or: r = get(f.lhs()) | get(f.rhs()); break;
      case Conn::Imp: {
        // w forces A->B iff no v >= w has A without B
        uint32_t bad = get(f.lhs()) & ~get(f.rhs());
        for (uint32_t w = 0; w < m.worlds; ++w)
          if ((m.up[w] & bad) == 0) r |= 1u << w;
        break;
      }
    }
    memo.emplace(f.raw(), r);
    return r;
  }
};

} // namespace

uint32_t force_mask(const KripkeModel& m, Formula f) {
  Forcer fc{m, {}};
  return fc.get(f);
}

bool forces(const KripkeModel& m, uint32_t world, Formula f) {
  return (force_mask(m, f) >> world) & 1u;
}

bool model_valid(const KripkeModel& m, Formula f) {
  uint32_t full = (1u << m.worlds) - 1;
  return force_mask(m, f) == full;
}

// --- countermodel search ----------------------------------------------------

namespace {

struct SearchPlan {
  std::vector<std::string> atoms; // sorted
  bool bot_slot = false;          // bot valued as one extra slot, placed last
  uint32_t slots = 0;
};

SearchPlan plan_for(Formula f, KripkeSemantics sem) {
  SearchPlan pl;
  auto as = measure(f).atom_set;
  pl.atoms.assign(as.begin(), as.end());
  pl.bot_slot = sem == KripkeSemantics::Minimal && contains_bot(f);
  pl.slots = static_cast<uint32_t>(pl.atoms.size()) + (pl.bot_slot ? 1 : 0);
  return pl;
}

// fail_mask: which worlds count as refuting (all of them, or just the root).
KripkeResult search(Formula f, KripkeSemantics sem, uint32_t min_worlds, uint32_t max_worlds,
                    bool rooted) {
  SearchPlan pl = plan_for(f, sem);
  KripkeResult res;
  for (uint32_t n = std::max(1u, min_worlds); n <= max_worlds && !res.refuted; ++n) {
    res.max_worlds_tried = n;
    uint32_t full = (1u << n) - 1;
    for (const Poset& p : rooted ? rooted_posets(n) : posets(n)) {
      KripkeModel m;
      m.worlds = n;
      m.up = p.up;
      for (const auto& a : pl.atoms) m.val.emplace_back(a, 0);
      for_each_canonical_valuation(p, pl.slots, [&](const std::vector<uint32_t>& masks) {
        for (size_t i = 0; i < pl.atoms.size(); ++i) m.val[i].second = masks[i];
        m.bot_mask = pl.bot_slot ? masks[pl.atoms.size()] : 0;
        uint32_t fm = force_mask(m, f);
        uint32_t failing = rooted ? (~fm & 1u) : (full & ~fm);
        if (failing == 0) return true;
        res.refuted = true;
        res.model = m;
        res.world = static_cast<uint32_t>(std::countr_zero(failing));
        return false;
      });
      if (res.refuted) break;
    }
  }
  return res;
}

} // namespace

KripkeResult kripke_refute(Formula f, KripkeSemantics sem, uint32_t max_worlds) {
  return search(f, sem, 1, max_worlds, false);
}

KripkeResult kripke_refute_rooted(Formula f, KripkeSemantics sem, uint32_t min_worlds,
                                  uint32_t max_worlds) {
  return search(f, sem, min_worlds, max_worlds, true);
}

// --- reporting --------------------------------------------------------------

namespace {

nlohmann::json mask_worlds(uint32_t mask, uint32_t n) {
  auto a = nlohmann::json::array();
  for (uint32_t w = 0; w < n; ++w)
    if ((mask >> w) & 1u) a.push_back(w);
  return a;
}

std::string mask_set(uint32_t mask, uint32_t n) {
  std::string s = "{";
  bool first = true;
  for (uint32_t w = 0; w < n; ++w)
    if ((mask >> w) & 1u) {
      if (!first) s += ",";
      s += std::to_string(w);
      first = false;
    }
  return s + "}";
}

} // namespace

nlohmann::json kripke_model_to_json(const KripkeModel& m) {
  nlohmann::json j;
  j["worlds"] = m.worlds;
  auto up = nlohmann::json::array();
  for (uint32_t w = 0; w < m.worlds; ++w) up.push_back(mask_worlds(m.up[w], m.worlds));
  j["up"] = up;
  auto val = nlohmann::json::object();
  for (const auto& [name, mask] : m.val) val[name] = mask_worlds(mask, m.worlds);
  j["valuation"] = val;
  j["bot"] = mask_worlds(m.bot_mask, m.worlds);
  return j;
}

std::string format_kripke_model(const KripkeModel& m) {
  std::string s = "worlds=" + std::to_string(m.worlds) + " up=[";
  for (uint32_t w = 0; w < m.worlds; ++w) {
    if (w) s += ",";
    s += mask_set(m.up[w], m.worlds);
  }
  s += "]";
  for (const auto& [name, mask] : m.val) s += " " + name + "=" + mask_set(mask, m.worlds);
  s += " bot=" + mask_set(m.bot_mask, m.worlds);
  return s;
}

} // namespace proofbench
