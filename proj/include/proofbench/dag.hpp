#pragma once
// Shared (dag) form of deductions. Discharge is positional here: a leaf's
// mark counts the scope edges (->I premise, |E case premises) strictly
// between the leaf and its discharger, so structurally identical
// subdeductions become identical nodes regardless of the labels the tree
// happened to use.

#include <nlohmann/json.hpp>

#include "proofbench/nd.hpp"

namespace proofbench {

struct DagNode {
  NdKind kind = NdKind::Assumption;
  Formula formula;
  std::optional<uint32_t> mark; // leaves: scope distance; absent = open
  NdRule rule = NdRule::ImpE;   // inferences only
  std::vector<uint32_t> children;

  explicit DagNode(Formula f) : formula(f) {}
};

// What a subdeduction still needs from its surroundings: one entry per open
// leaf formula (no index) and per externally discharged leaf formula (index
// = scope distance measured from this node's outgoing edge).
struct FpEntry {
  Formula formula;
  std::optional<uint32_t> ext;
};
bool operator==(const FpEntry& x, const FpEntry& y);
bool fp_entry_less(const FpEntry& x, const FpEntry& y);

using Fingerprint = std::vector<FpEntry>; // sorted by fp_entry_less, deduplicated

struct ProofDag {
  std::vector<DagNode> nodes;
  std::vector<Fingerprint> fps; // parallel to nodes
  uint32_t root = 0;
};

enum class CompressLevel { L1, L2 };

// L1: bottom-up structural sharing. Lossless: unfolding returns the input
// tree up to canonical labels. L2: additionally merges nodes that prove the
// same formula from the same fingerprint; the lowest such node becomes the
// representative, which keeps the redirections pointing downward and the
// graph acyclic. The input must be a valid deduction (check_nd first).
ProofDag compress(const NdDerivation& tree, CompressLevel level);

// Expands sharing back into a labeled tree with canonical labels.
NdDerivation unfold(const ProofDag& dag);

struct DagCheckResult {
  bool valid = false;
  std::string reason;
};

// Validates: acyclicity, every node reachable from the root, arities and
// rule shapes, profile restrictions, stored fingerprints equal to the
// recomputed ones, index-0 entries at scope edges bind the discharged
// formula, and the root fingerprint has no external entries.
DagCheckResult check_dag(const ProofDag& dag, const NdProfile& prof);

uint32_t dag_size(const ProofDag& dag);

nlohmann::json dag_to_json(const ProofDag& dag);
ProofDag dag_from_json(const nlohmann::json& j); // throws std::invalid_argument

} // namespace proofbench
