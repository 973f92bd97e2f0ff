#pragma once

#include <string>
#include <vector>

#include "vcgen/graph.hpp"
#include "vcgen/local_config.hpp"

namespace vcgen {

enum class NodeKind {
  expanded,        // children cover the node's instance space
  rule,            // a certified branching rule
  simplification,  // a simplification rule is guaranteed to apply
  constant,        // empty boundary: a whole component of constant size
  unreachable,     // contains a structure excluded by the subspace assertions
  reference,       // isomorphic to another node; shares its subtree
};

std::string to_string(NodeKind kind);
NodeKind parse_node_kind(const std::string& text);

enum class RuleKind { randomized, deterministic };

struct TreeEdge {
  ExpansionLabel label;
  int node = -1;
};

struct TreeNode {
  LocalConfiguration config;
  NodeKind kind = NodeKind::expanded;
  int depth = 0;

  // expanded
  int selected = -1;
  std::vector<TreeEdge> children;

  // rule: branch vertex sets and weights in the same order
  RuleKind rule_kind = RuleKind::randomized;
  std::vector<VertexMask> branches;
  std::vector<double> weights;
  double objective = 0.0;

  // simplification
  int simplification_rule = 0;

  // reference: node whose subtree applies; perm maps this config's vertex
  // slots to the target's.
  int target = -1;
  std::vector<int> perm;
};

struct ExpansionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  const TreeNode& root() const { return nodes.front(); }
};

struct MatchResult {
  int leaf = -1;
  // configuration vertex slot -> instance vertex, for the leaf's configuration
  std::vector<Vertex> embedding;
  // nodes visited root to leaf
  std::vector<int> path;
};

// Walks the tree from the root under `anchor` (root vertex -> instance
// vertex). At an expanded node the unresolved instance edge at the selected
// vertex with the smallest opposite endpoint picks the child. Reference
// nodes are followed into their target. Throws CertificateViolation when no
// child matches.
MatchResult match_instance(const ExpansionTree& tree, const Graph& g, std::vector<Vertex> anchor);

}  // namespace vcgen
