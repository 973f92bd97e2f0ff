#include "vcgen/rulegen.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_map>

#include "vcgen/requirements.hpp"
#include "vcgen/simplify.hpp"
#include "vcgen/subspace.hpp"

namespace vcgen {

std::string to_string(RuleKind kind) {
  return kind == RuleKind::randomized ? "randomized" : "deterministic";
}

RuleKind parse_rule_kind(const std::string& text) {
  if (text == "randomized" || text == "rand" || text == "lp") return RuleKind::randomized;
  if (text == "deterministic" || text == "det" || text == "ilp") return RuleKind::deterministic;
  throw InputError("unknown mode '" + text + "' (expected randomized or deterministic)");
}

RuleProblem build_problem(const LocalConfiguration& l, std::span<const Branch> branches,
                          const Measure& m, const Assertions& a) {
  RuleProblem p;
  CoverTable table(l);
  p.crucial = crucial_set(l, table);
  for (Branch b : branches) {
    p.branches.push_back(b);
    p.costs.push_back(rounded_cost(cost_bound(l, b, m, a).exponent));
    std::vector<int> sat;
    for (std::size_t r = 0; r < p.crucial.size(); ++r)
      if (table.satisfies(b, p.crucial[r])) sat.push_back(static_cast<int>(r));
    p.satisfied.push_back(std::move(sat));
  }
  return p;
}

namespace {

constexpr double kLpSlack = 1e-9;

struct Blocked {
  std::string reason;
};

std::vector<int> relabel(const LocalConfiguration& from, const LocalConfiguration& to) {
  const CanonicalForm a = canonical_form(from);
  const CanonicalForm b = canonical_form(to);
  std::vector<int> perm(static_cast<std::size_t>(from.slots()), -1);
  for (std::size_t i = 0; i < a.order.size(); ++i) perm[a.order[i]] = b.order[i];
  return perm;
}

class Generator {
 public:
  Generator(const Measure& m, int delta, RuleKind mode, const Assertions& a, const GenLimits& limits,
            const GenObserver& observer, int subspace_id)
      : m_(m), delta_(delta), mode_(mode), a_(a), limits_(limits), observer_(observer), sid_(subspace_id),
        start_(std::chrono::steady_clock::now()) {}

  GenerationReport run(const LocalConfiguration& root) {
    GenerationReport report;
    report.table.subspace_id = sid_;
    report.table.measure = m_;
    report.table.mode = mode_;
    report.table.delta = delta_;
    report.table.assertions = a_;
    try {
      std::vector<Branch> basis = seed_branches(root);
      basis.insert(basis.begin(), Branch{0});
      visit(root, basis, 0);
      report.success = true;
    } catch (const Blocked& b) {
      report.reason = b.reason;
      report.chain = chain_;
      report.table.metadata.limit_hit = true;
      report.table.metadata.limit = b.reason;
    }
    report.table.tree.nodes = std::move(nodes_);
    GenMetadata& md = report.table.metadata;
    for (const TreeNode& n : report.table.tree.nodes) {
      ++md.nodes;
      md.depth_reached = std::max(md.depth_reached, n.depth);
      switch (n.kind) {
        case NodeKind::rule: ++md.rules; break;
        case NodeKind::reference: ++md.references; break;
        case NodeKind::simplification: ++md.simplifications; break;
        case NodeKind::constant: ++md.constants; break;
        case NodeKind::unreachable: ++md.unreachable; break;
        case NodeKind::expanded: break;
      }
    }
    return report;
  }

 private:
  int visit(const LocalConfiguration& l, const std::vector<Branch>& basis, int depth) {
    chain_.push_back(describe(l));
    if (static_cast<long>(nodes_.size()) >= limits_.max_nodes)
      throw Blocked{"node limit " + std::to_string(limits_.max_nodes) + " reached"};
    if (std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() > limits_.seconds)
      throw Blocked{"time limit reached"};

    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[id].config = l;
    nodes_[id].depth = depth;

    if (auto site = config_site(l)) {
      nodes_[id].kind = NodeKind::simplification;
      nodes_[id].simplification_rule = site->rule_id;
      chain_.pop_back();
      return id;
    }
    if (boundary(l) == 0) {
      nodes_[id].kind = NodeKind::constant;
      chain_.pop_back();
      return id;
    }
    if (sid_ > 0 && contains_forbidden(l, sid_)) {
      nodes_[id].kind = NodeKind::unreachable;
      chain_.pop_back();
      return id;
    }
    if (l.size() > limits_.max_config_vertices)
      throw Blocked{"configuration exceeds " + std::to_string(limits_.max_config_vertices) + " vertices"};
    if (popcount(boundary(l)) > kRequirementBoundaryCap)
      throw Blocked{"boundary exceeds " + std::to_string(kRequirementBoundaryCap) + " vertices"};

    const std::string key = canonical_key(l);
    if (auto it = memo_.find(key); it != memo_.end()) {
      nodes_[id].kind = NodeKind::reference;
      nodes_[id].target = it->second;
      nodes_[id].perm = relabel(l, nodes_[it->second].config);
      chain_.pop_back();
      return id;
    }
    memo_.emplace(key, id);

    std::vector<Branch> kept;
    double best = 0.0;
    if (attach_rule(l, basis, nodes_[id], kept, best)) {
      chain_.pop_back();
      return id;
    }
    if (depth >= limits_.max_depth)
      throw Blocked{"depth limit " + std::to_string(limits_.max_depth) + " reached (best objective " +
                    format_double(best) + ")"};

    kept.insert(kept.begin(), Branch{0});
    std::vector<ExpansionChild> children = expand(l, delta_);
    nodes_[id].kind = NodeKind::expanded;
    nodes_[id].selected = children.front().selected;
    for (const ExpansionChild& c : children) {
      std::vector<Branch> next = extend_branches(kept, c.selected, c.other);
      int child = visit(c.config, next, depth + 1);
      nodes_[id].children.push_back(TreeEdge{c.label, child});
    }
    chain_.pop_back();
    return id;
  }

  // Fills a rule into `node` when one passes; `kept` receives the
  // surviving candidate branches either way.
  bool attach_rule(const LocalConfiguration& l, const std::vector<Branch>& basis, TreeNode& node,
                   std::vector<Branch>& kept, double& best) {
    std::vector<Branch> candidates;
    for (Branch b : basis)
      if (b != 0) candidates.push_back(b);
    const RuleProblem full = build_problem(l, candidates, m_, a_);

    RuleProblem p;
    p.crucial = full.crucial;
    for (std::size_t i : prune_dominated(full.costs, full.satisfied)) {
      p.branches.push_back(full.branches[i]);
      p.costs.push_back(full.costs[i]);
      p.satisfied.push_back(full.satisfied[i]);
    }
    kept = p.branches;

    NodeObservation obs;
    obs.config = describe(l);
    obs.branches = p.branches.size();
    obs.requirements = p.crucial.size();
    obs.problem = &p;
    const CoverProgram prog = p.program();
    const CoverSolution lp = solve_lp(prog);
    obs.lp_feasible = lp.feasible;
    obs.lp_objective = lp.objective;
    best = lp.feasible ? lp.objective : std::numeric_limits<double>::infinity();

    std::vector<double> weights;
    bool accepted = false;
    auto accept_if = [&](std::vector<double> w) {
      if (min_coverage(prog, w) >= 1.0 && objective(p.costs, w) <= 1.0) {
        weights = std::move(w);
        accepted = true;
      }
    };
    auto run_ilp = [&] {
      const CoverSolution ilp = solve_ilp(prog);
      obs.ilp_solved = true;
      obs.ilp_feasible = ilp.feasible;
      obs.ilp_objective = ilp.objective;
      if (ilp.feasible) accept_if(ilp.weights);
    };

    if (mode_ == RuleKind::deterministic) {
      if (lp.feasible && lp.objective <= 1.0 + kLpSlack) run_ilp();
    } else if (lp.feasible) {
      accept_if(snap_weights(prog, lp.weights));
      if (!accepted && lp.objective <= 1.0 + kLpSlack) run_ilp();
    }
    obs.accepted = accepted;
    if (observer_) observer_(obs);
    if (!accepted) return false;

    node.kind = NodeKind::rule;
    node.rule_kind = mode_;
    for (std::size_t i = 0; i < p.branches.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      node.branches.push_back(p.branches[i]);
      node.weights.push_back(weights[i]);
    }
    node.objective = objective(p.costs, weights);
    return true;
  }

  Measure m_;
  int delta_;
  RuleKind mode_;
  Assertions a_;
  GenLimits limits_;
  const GenObserver& observer_;
  int sid_;
  std::chrono::steady_clock::time_point start_;
  std::vector<TreeNode> nodes_;
  std::unordered_map<std::string, int> memo_;
  std::vector<std::string> chain_;
};

}  // namespace

GenerationReport gensa(const LocalConfiguration& root, const Measure& m, int delta, RuleKind mode,
                       const Assertions& a, const GenLimits& limits, const GenObserver& observer,
                       int subspace_id) {
  const FeasibilityReport feas = check_feasibility(m);
  if (!feas.pass) {
    std::string msg = "measure violates:";
    for (const std::string& v : feas.violated) msg += " " + v + ";";
    throw InputError(msg);
  }
  Generator gen(m, delta, mode, a, limits, observer, subspace_id);
  return gen.run(root);
}

GenerationReport generate_subspace(int id, const Measure& m, RuleKind mode, const GenLimits& limits,
                                   const GenObserver& observer) {
  return gensa(root_config(id), m, 3, mode, assertions_for(id), limits, observer, id);
}

Certificate verify_table(const RuleTable& t) {
  Certificate cert;
  const FeasibilityReport feas = check_feasibility(t.measure);
  cert.measure_feasible = feas.pass;
  cert.measure_violations = feas.violated;
  if (!feas.pass) cert.failures.push_back("measure infeasible");

  const auto& nodes = t.tree.nodes;
  auto fail = [&](int at, const std::string& what) {
    cert.failures.push_back("node " + std::to_string(at) + ": " + what);
  };
  if (nodes.empty()) cert.failures.push_back("empty tree");
  if (!nodes.empty() && t.subspace_id > 0) {
    if (t.subspace_id > kSubspaceCount)
      cert.failures.push_back("unknown subspace id");
    else if (!(nodes.front().config == root_config(t.subspace_id)))
      cert.failures.push_back("root is not the subspace root configuration");
  }
  const int lemma = cost_lemma(t.assertions);

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const int at = static_cast<int>(i);
    const TreeNode& n = nodes[i];
    const LocalConfiguration& l = n.config;
    ++cert.nodes_checked;
    switch (n.kind) {
      case NodeKind::expanded: {
        if (boundary(l) == 0) {
          fail(at, "expanded node with empty boundary");
          break;
        }
        const std::vector<ExpansionChild> want = expand(l, t.delta);
        if (n.selected != want.front().selected) fail(at, "selected vertex differs from expand()");
        if (n.children.size() != want.size()) {
          fail(at, "has " + std::to_string(n.children.size()) + " children, expand() gives " +
                       std::to_string(want.size()));
          break;
        }
        for (std::size_t c = 0; c < want.size(); ++c) {
          const TreeEdge& e = n.children[c];
          if (e.node <= at || e.node >= static_cast<int>(nodes.size())) {
            fail(at, "child index out of order");
            continue;
          }
          if (!(e.label == want[c].label) || !(nodes[e.node].config == want[c].config))
            fail(at, "child " + to_string(want[c].label) + " does not match expand()");
        }
        break;
      }
      case NodeKind::rule: {
        LeafCheck leaf;
        leaf.node = at;
        std::string problem;
        if (n.branches.empty() || n.branches.size() != n.weights.size()) problem = "malformed branch list";
        for (std::size_t b = 0; b < n.branches.size() && problem.empty(); ++b) {
          if (n.branches[b] == 0 || (n.branches[b] & ~l.vertices()) != 0) problem = "branch outside configuration";
          const double w = n.weights[b];
          if (!(w > 0.0 && w <= 1.0)) problem = "weight outside (0, 1]";
          if (t.mode == RuleKind::deterministic && w != 1.0) problem = "deterministic weight not 1";
          if (n.rule_kind != t.mode) problem = "rule kind differs from table mode";
        }
        if (problem.empty() && popcount(boundary(l)) > kRequirementBoundaryCap) problem = "boundary too large";
        if (problem.empty()) {
          const RuleProblem p = build_problem(l, n.branches, t.measure, t.assertions);
          const CoverProgram prog = p.program();
          leaf.min_coverage = p.crucial.empty() ? 1.0 : min_coverage(prog, n.weights);
          leaf.objective = objective(p.costs, n.weights);
          if (leaf.min_coverage < 1.0)
            problem = "coverage " + format_double(leaf.min_coverage) + " below 1";
          else if (leaf.objective > 1.0)
            problem = "objective " + format_double(leaf.objective) + " above 1 (lemma " +
                      std::to_string(lemma) + ")";
        }
        leaf.pass = problem.empty();
        leaf.problem = problem;
        if (!leaf.pass) fail(at, problem);
        cert.leaves.push_back(leaf);
        break;
      }
      case NodeKind::simplification: {
        auto site = config_site(l);
        if (!site || site->rule_id != n.simplification_rule) fail(at, "simplification rule does not fire");
        break;
      }
      case NodeKind::constant:
        if (boundary(l) != 0) fail(at, "constant leaf with nonempty boundary");
        break;
      case NodeKind::unreachable:
        if (t.subspace_id <= 0 || !contains_forbidden(l, t.subspace_id))
          fail(at, "unreachable leaf without a forbidden structure");
        break;
      case NodeKind::reference: {
        if (n.target < 0 || n.target >= at || nodes[n.target].kind == NodeKind::reference) {
          fail(at, "bad reference target");
          break;
        }
        const LocalConfiguration& g = nodes[n.target].config;
        bool iso = static_cast<int>(n.perm.size()) == l.slots() && l.size() == g.size() &&
                   l.num_edges() == g.num_edges();
        VertexMask image = 0;
        for (int v : mask_vertices(l.vertices())) {
          if (!iso) break;
          const int pv = n.perm[v];
          if (!g.present(pv) || (image & bit(pv)) || g.incomplete(pv) != l.incomplete(v)) {
            iso = false;
            break;
          }
          image |= bit(pv);
          for (int u : mask_vertices(l.neighbors(v)))
            if (!g.has_edge(pv, n.perm[u])) iso = false;
        }
        if (!iso) fail(at, "reference permutation is not an isomorphism");
        break;
      }
    }
  }
  cert.pass = cert.failures.empty();
  return cert;
}

}  // namespace vcgen
