#include "vcgen/expansion_tree.hpp"

#include <algorithm>

namespace vcgen {

std::string to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::expanded: return "expanded";
    case NodeKind::rule: return "rule";
    case NodeKind::simplification: return "simplification";
    case NodeKind::constant: return "constant";
    case NodeKind::unreachable: return "unreachable";
    case NodeKind::reference: return "reference";
  }
  return "?";
}

NodeKind parse_node_kind(const std::string& text) {
  for (NodeKind k : {NodeKind::expanded, NodeKind::rule, NodeKind::simplification,
                     NodeKind::constant, NodeKind::unreachable, NodeKind::reference})
    if (to_string(k) == text) return k;
  throw InputError("unknown node kind '" + text + "'");
}

MatchResult match_instance(const ExpansionTree& tree, const Graph& g, std::vector<Vertex> phi) {
  MatchResult out;
  int at = 0;
  for (;;) {
    out.path.push_back(at);
    const TreeNode& node = tree.nodes.at(static_cast<std::size_t>(at));
    if (node.kind == NodeKind::reference) {
      const TreeNode& target = tree.nodes.at(static_cast<std::size_t>(node.target));
      std::vector<Vertex> moved(static_cast<std::size_t>(target.config.slots()), -1);
      for (int v = 0; v < node.config.slots(); ++v)
        if (node.config.present(v)) moved[node.perm[v]] = phi[v];
      phi = std::move(moved);
      at = node.target;
      continue;
    }
    if (node.kind != NodeKind::expanded) {
      out.leaf = at;
      out.embedding = std::move(phi);
      return out;
    }

    const LocalConfiguration& l = node.config;
    const int v = node.selected;
    const Vertex image = phi[v];
    Vertex pick = -1;
    for (Vertex w : g.neighbors(image)) {
      // skip edges already present in H
      auto it = std::find(phi.begin(), phi.end(), w);
      if (it != phi.end()) {
        int u = static_cast<int>(it - phi.begin());
        if (l.present(u) && l.has_edge(u, v)) continue;
      }
      pick = w;
      break;
    }
    if (pick < 0)
      throw CertificateViolation("match_instance: selected vertex has no unresolved edge at node " +
                                 std::to_string(at));

    ExpansionLabel want{ExpansionLabel::Kind::fresh, g.degree(pick)};
    auto it = std::find(phi.begin(), phi.end(), pick);
    if (it != phi.end()) want = {ExpansionLabel::Kind::internal, static_cast<int>(it - phi.begin())};

    auto child = std::find_if(node.children.begin(), node.children.end(),
                              [&](const TreeEdge& e) { return e.label == want; });
    if (child == node.children.end())
      throw CertificateViolation("match_instance: no child " + to_string(want) + " at node " +
                                 std::to_string(at));
    if (want.kind == ExpansionLabel::Kind::fresh) {
      const int slot = tree.nodes.at(static_cast<std::size_t>(child->node)).config.slots() - 1;
      phi.resize(static_cast<std::size_t>(slot) + 1, -1);
      phi[slot] = pick;
    }
    at = child->node;
  }
}

}  // namespace vcgen
