#include <doctest.h>

#include "proofbench/dag.hpp"
#include "proofbench/sc_prover.hpp"
#include "proofbench/translate.hpp"

using namespace proofbench;

namespace {
Formula F(const char* s) { return parse_formula(s); }

// (p -> (p -> ... -> q)) -> (p -> q) with n nested ps
Formula reuse_heavy(uint32_t n) {
  Formula ante = F("q");
  for (uint32_t i = 0; i < n; ++i) ante = Formula::imp(F("p"), ante);
  return Formula::imp(ante, F("p -> q"));
}

NdDerivation proved_nd(Formula f, const NdProfile& target) {
  ProveResult r = prove_sc(f, CalculusProfile::lm_imp());
  REQUIRE(r.status == ProveStatus::Proved);
  NdDerivation nd = translate_sc_to_nd(*r.derivation, target);
  REQUIRE(check_nd(nd, target).valid);
  return nd;
}
} // namespace

TEST_CASE("single leaf compresses to a single node") {
  NdDerivation leaf = nd_assume(F("p"));
  ProofDag dag = compress(leaf, CompressLevel::L1);
  CHECK(dag.nodes.size() == 1);
  CHECK(check_dag(dag, NdProfile::nm_full()).valid);
  CHECK(unfold(dag) == leaf);
}

TEST_CASE("identical subdeductions share one node regardless of labels") {
  // (p -> p) & (p -> p), each conjunct proved under its own label
  NdDerivation l1 = nd_assume(F("p"));
  l1.mark = 1;
  NdDerivation l2 = nd_assume(F("p"));
  l2.mark = 2;
  NdDerivation i1(NdRule::ImpI, F("p -> p"), {l1}, 1);
  NdDerivation i2(NdRule::ImpI, F("p -> p"), {l2}, 2);
  NdDerivation both(NdRule::AndI, F("(p -> p) & (p -> p)"), {i1, i2});
  REQUIRE(check_nd(both, NdProfile::nm_full()).valid);

  ProofDag dag = compress(both, CompressLevel::L1);
  CHECK(dag.nodes.size() == 3); // leaf, ->I, &I
  CHECK(check_dag(dag, NdProfile::nm_full()).valid);
  CHECK(unfold(dag) == nd_canonical_labels(both));
}

TEST_CASE("open and discharged leaves of the same formula stay distinct") {
  // ->E of p against p -> p proved by discharging a different p
  NdDerivation marked = nd_assume(F("p"));
  marked.mark = 1;
  NdDerivation impi(NdRule::ImpI, F("p -> p"), {marked}, 1);
  NdDerivation d(NdRule::ImpE, F("p"), {nd_assume(F("p")), impi});
  REQUIRE(check_nd(d, NdProfile::nm_full()).valid);

  ProofDag dag = compress(d, CompressLevel::L1);
  CHECK(dag.nodes.size() == 4); // open p, bound p, ->I, ->E
  CHECK(unfold(dag) == nd_canonical_labels(d));
}

TEST_CASE("round trip is the identity up to canonical labels") {
  for (const char* s : {"p -> p", "p -> q -> p", "(p -> q) -> (q -> r) -> p -> r",
                        "((p -> q) -> q) -> (p -> q) -> q"}) {
    NdDerivation nd = proved_nd(F(s), NdProfile::nm_full());
    ProofDag dag = compress(nd, CompressLevel::L1);
    CHECK(check_dag(dag, NdProfile::nm_full()).valid);
    CHECK(unfold(dag) == nd_canonical_labels(nd));
  }
}

TEST_CASE("translated reuse family: known tree and dag sizes") {
  for (uint32_t n : {1u, 2u, 5u, 8u}) {
    NdDerivation nd = proved_nd(reuse_heavy(n), NdProfile::nm_full());
    CHECK(nd_metrics(nd).size == 2 * n + 3);
    ProofDag l1 = compress(nd, CompressLevel::L1);
    CHECK(l1.nodes.size() == n + 4);
    CHECK(check_dag(l1, NdProfile::nm_full()).valid);
    CHECK(unfold(l1) == nd_canonical_labels(nd));
  }
}

TEST_CASE("second level merges repetition wrappers with their source") {
  // nm-imp translation wraps each graft in Rep; L2 folds those away
  for (uint32_t n : {2u, 4u}) {
    NdDerivation nd = proved_nd(reuse_heavy(n), NdProfile::nm_imp());
    ProofDag l1 = compress(nd, CompressLevel::L1);
    ProofDag l2 = compress(nd, CompressLevel::L2);
    CHECK(l1.nodes.size() == 2 * n + 4);
    CHECK(l2.nodes.size() == n + 4);
    CHECK(l2.nodes.size() <= l1.nodes.size());
    CHECK(l1.nodes.size() <= nd_metrics(nd).size);
    CHECK(check_dag(l1, NdProfile::nm_imp()).valid);
    CHECK(check_dag(l2, NdProfile::nm_imp()).valid);
    CHECK(unfold(l1) == nd_canonical_labels(nd));
  }
}

TEST_CASE("l2 keeps the conclusion and validity, not the tree") {
  NdDerivation nd = proved_nd(reuse_heavy(3), NdProfile::nm_imp());
  ProofDag l2 = compress(nd, CompressLevel::L2);
  NdDerivation back = unfold(l2);
  CHECK(back.formula == nd.formula);
  CHECK(check_nd(back, NdProfile::nm_imp()).valid);
}

TEST_CASE("corrupt dags are rejected") {
  NdDerivation nd = proved_nd(F("p -> q -> p"), NdProfile::nm_full());
  ProofDag dag = compress(nd, CompressLevel::L1);
  REQUIRE(check_dag(dag, NdProfile::nm_full()).valid);

  // a leaf's fingerprint is its own formula; blanking it must be caught
  ProofDag wrong_fp = dag;
  bool blanked = false;
  for (uint32_t i = 0; i < wrong_fp.nodes.size(); ++i)
    if (wrong_fp.nodes[i].kind == NdKind::Assumption) {
      wrong_fp.fps[i].clear();
      blanked = true;
      break;
    }
  REQUIRE(blanked);
  CHECK(!check_dag(wrong_fp, NdProfile::nm_full()).valid);

  ProofDag cyclic = dag;
  for (uint32_t i = 0; i < cyclic.nodes.size(); ++i)
    if (!cyclic.nodes[i].children.empty()) {
      cyclic.nodes[i].children[0] = i; // self loop
      break;
    }
  CHECK(!check_dag(cyclic, NdProfile::nm_full()).valid);

  ProofDag unreachable = dag;
  unreachable.nodes.push_back(DagNode(F("z")));
  unreachable.fps.push_back({FpEntry{F("z"), std::nullopt}});
  CHECK(!check_dag(unreachable, NdProfile::nm_full()).valid);
}

TEST_CASE("dag size and metrics helpers agree on trees without sharing") {
  NdDerivation leaf = nd_assume(F("p"));
  NdDerivation d(NdRule::ImpI, F("q -> p"), {leaf}, 1);
  ProofDag dag = compress(d, CompressLevel::L1);
  CHECK(dag_size(dag) == nd_metrics(d).size);
}
