#include "proofbench/dag.hpp"

#include <algorithm>
#include <map>

namespace proofbench {

bool operator==(const FpEntry& x, const FpEntry& y) {
  return x.formula == y.formula && x.ext == y.ext;
}

bool fp_entry_less(const FpEntry& x, const FpEntry& y) {
  int c = structural_cmp(x.formula, y.formula);
  if (c != 0) return c < 0;
  if (x.ext.has_value() != y.ext.has_value()) return !x.ext.has_value();
  if (!x.ext) return false;
  return *x.ext < *y.ext;
}

namespace {

void sort_dedup(Fingerprint& fp) {
  std::sort(fp.begin(), fp.end(), fp_entry_less);
  fp.erase(std::unique(fp.begin(), fp.end()), fp.end());
}

// discharge formula bound on the edge node -> child i, if it is a scope edge
std::optional<Formula> scope_bind(const std::vector<DagNode>& nodes, const DagNode& n, size_t i) {
  if (n.kind != NdKind::Inference) return std::nullopt;
  if (n.rule == NdRule::ImpI && i == 0) return n.formula.lhs();
  if (n.rule == NdRule::OrE && (i == 1 || i == 2)) {
    Formula disj = nodes[n.children[0]].formula;
    return i == 1 ? disj.lhs() : disj.rhs();
  }
  return std::nullopt;
}

struct FpComputer {
  const std::vector<DagNode>& nodes;
  std::vector<std::optional<Fingerprint>> memo;
  std::string error;

  explicit FpComputer(const std::vector<DagNode>& ns) : nodes(ns), memo(ns.size()) {}

  const Fingerprint* get(uint32_t id) {
    if (memo[id]) return &*memo[id];
    const DagNode& n = nodes[id];
    Fingerprint fp;
    if (n.kind == NdKind::Assumption) {
      fp.push_back(FpEntry{n.formula, n.mark});
    } else {
      for (size_t i = 0; i < n.children.size(); ++i) {
        const Fingerprint* child = get(n.children[i]);
        if (!child) return nullptr;
        std::optional<Formula> bind = scope_bind(nodes, n, i);
        for (const FpEntry& e : *child) {
          if (!bind || !e.ext) {
            fp.push_back(e);
          } else if (*e.ext == 0) {
            if (e.formula != *bind) {
              error = "scope edge binds '" + format(*bind) + "' but a leaf under it reads '" +
                      format(e.formula) + "'";
              return nullptr;
            }
          } else {
            fp.push_back(FpEntry{e.formula, *e.ext - 1});
          }
        }
      }
      sort_dedup(fp);
    }
    memo[id] = std::move(fp);
    return &*memo[id];
  }
};

using ConsKey = std::tuple<uint8_t, const void*, uint8_t, int64_t, std::vector<uint32_t>>;

ConsKey cons_key(const DagNode& n) {
  return {static_cast<uint8_t>(n.kind), n.formula.raw(),
          n.kind == NdKind::Inference ? static_cast<uint8_t>(n.rule) : uint8_t{0},
          n.mark ? static_cast<int64_t>(*n.mark) : int64_t{-1}, n.children};
}

struct Builder {
  std::vector<DagNode> nodes;
  std::map<ConsKey, uint32_t> dedup;

  uint32_t cons(DagNode n) {
    ConsKey k = cons_key(n);
    auto it = dedup.find(k);
    if (it != dedup.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(nodes.size());
    nodes.push_back(std::move(n));
    dedup.emplace(std::move(k), id);
    return id;
  }

  uint32_t from_tree(const NdDerivation& d, std::vector<uint32_t>& scope_labels) {
    DagNode n(d.formula);
    n.kind = d.kind;
    if (d.kind == NdKind::Assumption) {
      if (d.mark) {
        for (size_t i = scope_labels.size(); i-- > 0;)
          if (scope_labels[i] == *d.mark) {
            n.mark = static_cast<uint32_t>(scope_labels.size() - 1 - i);
            return cons(std::move(n));
          }
        throw std::invalid_argument("compress: mark resolves to no enclosing discharger");
      }
      return cons(std::move(n));
    }
    n.rule = d.rule;
    for (size_t i = 0; i < d.children.size(); ++i) {
      bool pushed = false;
      if ((d.rule == NdRule::ImpI && i == 0) || (d.rule == NdRule::OrE && (i == 1 || i == 2))) {
        scope_labels.push_back(d.label.value());
        pushed = true;
      }
      n.children.push_back(from_tree(d.children[i], scope_labels));
      if (pushed) scope_labels.pop_back();
    }
    return cons(std::move(n));
  }
};

std::vector<Fingerprint> compute_fps(const std::vector<DagNode>& nodes, std::string* error) {
  FpComputer fc(nodes);
  std::vector<Fingerprint> out(nodes.size());
  for (uint32_t id = 0; id < nodes.size(); ++id) {
    const Fingerprint* fp = fc.get(id);
    if (!fp) {
      if (error) *error = fc.error;
      return {};
    }
    out[id] = *fp;
  }
  if (error) error->clear();
  return out;
}

std::vector<uint32_t> node_heights(const std::vector<DagNode>& nodes) {
  // construction order is bottom-up, but recompute defensively
  std::vector<uint32_t> h(nodes.size(), 0);
  std::vector<bool> done(nodes.size(), false);
  std::vector<uint32_t> stack;
  for (uint32_t seed = 0; seed < nodes.size(); ++seed) {
    if (done[seed]) continue;
    stack.push_back(seed);
    while (!stack.empty()) {
      uint32_t id = stack.back();
      if (done[id]) {
        stack.pop_back();
        continue;
      }
      bool ready = true;
      for (uint32_t c : nodes[id].children)
        if (!done[c]) {
          stack.push_back(c);
          ready = false;
        }
      if (!ready) continue;
      uint32_t m = 0;
      for (uint32_t c : nodes[id].children) m = std::max(m, h[c] + 1);
      h[id] = m;
      done[id] = true;
      stack.pop_back();
    }
  }
  return h;
}

} // namespace

ProofDag compress(const NdDerivation& tree, CompressLevel level) {
  Builder b;
  std::vector<uint32_t> scope_labels;
  uint32_t root = b.from_tree(tree, scope_labels);

  std::string err;
  std::vector<Fingerprint> fps = compute_fps(b.nodes, &err);
  if (!err.empty()) throw std::invalid_argument("compress: " + err);
  if (level == CompressLevel::L1) return ProofDag{std::move(b.nodes), std::move(fps), root};

  // L2: merge equal (formula, fingerprint) classes toward their lowest node.
  std::vector<uint32_t> heights = node_heights(b.nodes);
  struct ClassKeyLess {
    bool operator()(const std::pair<Formula, Fingerprint>& x,
                    const std::pair<Formula, Fingerprint>& y) const {
      int c = structural_cmp(x.first, y.first);
      if (c != 0) return c < 0;
      return std::lexicographical_compare(x.second.begin(), x.second.end(), y.second.begin(),
                                          y.second.end(), fp_entry_less);
    }
  };
  std::map<std::pair<Formula, Fingerprint>, uint32_t, ClassKeyLess> rep;
  std::vector<uint32_t> remap(b.nodes.size());
  for (uint32_t id = 0; id < b.nodes.size(); ++id) {
    auto key = std::make_pair(b.nodes[id].formula, fps[id]);
    auto [it, fresh] = rep.emplace(std::move(key), id);
    if (!fresh) {
      uint32_t& best = it->second;
      if (heights[id] < heights[best]) best = id; // ids are bottom-up, ties keep the first
    }
  }
  for (uint32_t id = 0; id < b.nodes.size(); ++id)
    remap[id] = rep.at({b.nodes[id].formula, fps[id]});

  Builder out;
  std::vector<std::optional<uint32_t>> rebuilt(b.nodes.size());
  auto resolve = [&](auto&& self, uint32_t id) -> uint32_t {
    uint32_t r = remap[id];
    if (rebuilt[r]) return *rebuilt[r];
    DagNode n = b.nodes[r];
    for (uint32_t& c : n.children) c = self(self, c);
    uint32_t nid = out.cons(std::move(n));
    rebuilt[r] = nid;
    return nid;
  };
  uint32_t new_root = resolve(resolve, root);
  std::vector<Fingerprint> new_fps = compute_fps(out.nodes, &err);
  if (!err.empty()) throw std::invalid_argument("compress: " + err);
  return ProofDag{std::move(out.nodes), std::move(new_fps), new_root};
}

namespace {

NdDerivation unfold_at(const ProofDag& dag, uint32_t id, std::vector<uint32_t>& scope_labels,
                       uint32_t& next_label) {
  const DagNode& n = dag.nodes[id];
  if (n.kind == NdKind::Assumption) {
    NdDerivation leaf = nd_assume(n.formula);
    if (n.mark) {
      if (*n.mark >= scope_labels.size())
        throw std::invalid_argument("unfold: mark deeper than the enclosing scopes");
      leaf.mark = scope_labels[scope_labels.size() - 1 - *n.mark];
    }
    return leaf;
  }
  NdDerivation out(n.rule, n.formula, {});
  if (n.rule == NdRule::ImpI || n.rule == NdRule::OrE) out.label = next_label++;
  for (size_t i = 0; i < n.children.size(); ++i) {
    bool pushed = false;
    if ((n.rule == NdRule::ImpI && i == 0) || (n.rule == NdRule::OrE && (i == 1 || i == 2))) {
      scope_labels.push_back(*out.label);
      pushed = true;
    }
    out.children.push_back(unfold_at(dag, n.children[i], scope_labels, next_label));
    if (pushed) scope_labels.pop_back();
  }
  return out;
}

} // namespace

NdDerivation unfold(const ProofDag& dag) {
  if (dag.nodes.empty()) throw std::invalid_argument("unfold: empty graph");
  std::vector<uint32_t> scope_labels;
  uint32_t next_label = 1;
  return nd_canonical_labels(unfold_at(dag, dag.root, scope_labels, next_label));
}

uint32_t dag_size(const ProofDag& dag) { return static_cast<uint32_t>(dag.nodes.size()); }

DagCheckResult check_dag(const ProofDag& dag, const NdProfile& prof) {
  auto fail = [](std::string reason) { return DagCheckResult{false, std::move(reason)}; };
  size_t n = dag.nodes.size();
  if (n == 0) return fail("empty graph");
  if (dag.fps.size() != n) return fail("fingerprint table size mismatch");
  if (dag.root >= n) return fail("root id out of range");
  for (const DagNode& nd : dag.nodes)
    for (uint32_t c : nd.children)
      if (c >= n) return fail("child id out of range");

  // acyclicity plus reachability from the root, in one colored dfs
  std::vector<uint8_t> color(n, 0); // 0 new, 1 on stack, 2 done
  std::vector<std::pair<uint32_t, size_t>> stack{{dag.root, 0}};
  color[dag.root] = 1;
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    if (next == dag.nodes[id].children.size()) {
      color[id] = 2;
      stack.pop_back();
      continue;
    }
    uint32_t c = dag.nodes[id].children[next++];
    if (color[c] == 1) return fail("cycle through node " + std::to_string(c));
    if (color[c] == 0) {
      color[c] = 1;
      stack.emplace_back(c, 0);
    }
  }
  for (size_t i = 0; i < n; ++i)
    if (color[i] != 2) return fail("node " + std::to_string(i) + " unreachable from the root");

  for (size_t i = 0; i < n; ++i) {
    const DagNode& nd = dag.nodes[i];
    std::string at = " (node " + std::to_string(i) + ")";
    if (!prof.allow_and_or && !implicational_only(nd.formula))
      return fail("profile " + prof.name + " admits implicational formulas only" + at);
    if (nd.kind == NdKind::Assumption) {
      if (!nd.children.empty()) return fail("assumption with children" + at);
      continue;
    }
    if (nd.mark) return fail("inference carrying an assumption mark" + at);
    if (!nd_rule_allowed(prof, nd.rule))
      return fail(std::string(nd_rule_name(nd.rule)) + " is not part of profile " + prof.name + at);
    auto kid = [&](size_t k) -> Formula { return dag.nodes[nd.children[k]].formula; };
    auto arity = [&](size_t want) { return nd.children.size() == want; };
    Formula f = nd.formula;
    bool ok = false;
    switch (nd.rule) {
      case NdRule::AndI:
        ok = arity(2) && f.kind() == Conn::And && f.lhs() == kid(0) && f.rhs() == kid(1);
        break;
      case NdRule::AndE1:
        ok = arity(1) && kid(0).kind() == Conn::And && kid(0).lhs() == f;
        break;
      case NdRule::AndE2:
        ok = arity(1) && kid(0).kind() == Conn::And && kid(0).rhs() == f;
        break;
      case NdRule::OrI1: ok = arity(1) && f.kind() == Conn::Or && f.lhs() == kid(0); break;
      case NdRule::OrI2: ok = arity(1) && f.kind() == Conn::Or && f.rhs() == kid(0); break;
      case NdRule::OrE:
        ok = arity(3) && kid(0).kind() == Conn::Or && kid(1) == f && kid(2) == f;
        break;
      case NdRule::ImpI: ok = arity(1) && f.is_imp() && f.rhs() == kid(0); break;
      case NdRule::ImpE:
        ok = arity(2) && kid(1).is_imp() && kid(1).lhs() == kid(0) && kid(1).rhs() == f;
        break;
      case NdRule::BotI: ok = arity(1) && kid(0).is_bot(); break;
      case NdRule::Rep: ok = arity(1) && kid(0) == f; break;
    }
    if (!ok) return fail(std::string(nd_rule_name(nd.rule)) + ": malformed application" + at);
  }

  std::string err;
  std::vector<Fingerprint> recomputed = compute_fps(dag.nodes, &err);
  if (!err.empty()) return fail(err);
  for (size_t i = 0; i < n; ++i)
    if (!(recomputed[i] == dag.fps[i]))
      return fail("stored fingerprint differs from recomputed (node " + std::to_string(i) + ")");
  for (const FpEntry& e : dag.fps[dag.root])
    if (e.ext) return fail("root fingerprint has external entry '" + format(e.formula) + "@" +
                           std::to_string(*e.ext) + "'");
  return DagCheckResult{true, ""};
}

// --- serialization -------------------------------------------------------

namespace {

std::string fp_entry_str(const FpEntry& e) {
  std::string s = format(e.formula);
  if (e.ext) s += "@" + std::to_string(*e.ext);
  return s;
}

FpEntry fp_entry_parse(const std::string& s) {
  size_t at = s.rfind('@');
  if (at == std::string::npos) return FpEntry{parse_formula(s), std::nullopt};
  std::string num = s.substr(at + 1);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad fingerprint entry '" + s + "'");
  return FpEntry{parse_formula(s.substr(0, at)), static_cast<uint32_t>(std::stoul(num))};
}

} // namespace

nlohmann::json dag_to_json(const ProofDag& dag) {
  // reverse postorder ids: the root is n0 and children follow their parents
  std::vector<uint32_t> order;
  {
    std::vector<uint8_t> seen(dag.nodes.size(), 0);
    std::vector<std::pair<uint32_t, size_t>> stack{{dag.root, 0}};
    seen[dag.root] = 1;
    while (!stack.empty()) {
      auto& [id, next] = stack.back();
      if (next == dag.nodes[id].children.size()) {
        order.push_back(id);
        stack.pop_back();
        continue;
      }
      uint32_t c = dag.nodes[id].children[next++];
      if (!seen[c]) {
        seen[c] = 1;
        stack.emplace_back(c, 0);
      }
    }
    std::reverse(order.begin(), order.end());
  }
  std::vector<std::string> name(dag.nodes.size());
  for (size_t i = 0; i < order.size(); ++i) name[order[i]] = "n" + std::to_string(i);

  nlohmann::json nodes = nlohmann::json::object();
  for (uint32_t id : order) {
    const DagNode& n = dag.nodes[id];
    nlohmann::json j;
    j["formula"] = format(n.formula);
    if (n.kind == NdKind::Assumption) {
      if (n.mark) j["label"] = *n.mark;
    } else {
      j["rule"] = nd_rule_name(n.rule);
      nlohmann::json kids = nlohmann::json::array();
      for (uint32_t c : n.children) kids.push_back(name[c]);
      j["children"] = std::move(kids);
    }
    nlohmann::json fp = nlohmann::json::array();
    for (const FpEntry& e : dag.fps[id]) fp.push_back(fp_entry_str(e));
    j["fingerprint"] = std::move(fp);
    nodes[name[id]] = std::move(j);
  }
  return nlohmann::json{{"root", name[dag.root]}, {"nodes", std::move(nodes)}};
}

ProofDag dag_from_json(const nlohmann::json& j) {
  try {
    const auto& jn = j.at("nodes");
    if (!jn.is_object()) throw std::invalid_argument("nodes must be an object");
    std::map<std::string, uint32_t> index;
    uint32_t next = 0;
    for (auto it = jn.begin(); it != jn.end(); ++it) index.emplace(it.key(), next++);
    auto ref = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) throw std::invalid_argument("dangling node reference '" + name + "'");
      return it->second;
    };
    ProofDag dag;
    dag.nodes.reserve(index.size());
    dag.fps.resize(index.size());
    for (auto it = jn.begin(); it != jn.end(); ++it) {
      const auto& rec = it.value();
      DagNode n(parse_formula(rec.at("formula").get<std::string>()));
      if (rec.contains("rule")) {
        n.kind = NdKind::Inference;
        auto rn = rec.at("rule").get<std::string>();
        auto rule = nd_rule_from_name(rn);
        if (!rule) throw std::invalid_argument("unknown rule id '" + rn + "'");
        n.rule = *rule;
        for (const auto& c : rec.at("children")) n.children.push_back(ref(c.get<std::string>()));
        if (rec.contains("label")) throw std::invalid_argument("inference node with label");
      } else {
        if (rec.contains("children")) throw std::invalid_argument("assumption node with children");
        if (rec.contains("label")) n.mark = rec["label"].get<uint32_t>();
      }
      Fingerprint fp;
      for (const auto& e : rec.at("fingerprint")) fp.push_back(fp_entry_parse(e.get<std::string>()));
      // iteration order assigned the indices, so ids arrive ascending
      uint32_t id = index.at(it.key());
      dag.fps[id] = std::move(fp);
      dag.nodes.push_back(std::move(n));
    }
    dag.root = ref(j.at("root").get<std::string>());
    return dag;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad dag record: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("bad dag record: ") + e.what());
  }
}

} // namespace proofbench
