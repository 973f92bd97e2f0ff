#include "vcgen/runtime.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>

#include "vcgen/simplify.hpp"
#include "vcgen/subspace.hpp"

namespace vcgen {

void RuleBook::add(RuleTable t) {
  const int id = t.subspace_id;
  if (id < 1 || id > kSubspaceCount) throw InputError("rule table has no subspace id");
  if (tables_[id]) throw InputError("two rule tables for " + subspace_name(id));
  tables_[id] = std::move(t);
}

const RuleTable* RuleBook::find(int subspace_id) const {
  if (subspace_id < 1 || subspace_id > kSubspaceCount || !tables_[subspace_id]) return nullptr;
  return &*tables_[subspace_id];
}

std::vector<int> RuleBook::missing() const {
  std::vector<int> out;
  for (int id = 1; id <= kSubspaceCount; ++id)
    if (!tables_[id]) out.push_back(id);
  return out;
}

std::string format_trace(const TraceStep& step) {
  std::string out = subspace_name(step.subspace) + " " + std::to_string(step.leaf) + " {";
  for (std::size_t i = 0; i < step.branch.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(step.branch[i]);
  }
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, step.probability, std::chars_format::general, 6);
  return out + "} " + std::string(buf, res.ptr);
}

std::vector<Vertex> find_anchor(const LocalConfiguration& root, const Graph& g) {
  // breadth-first order so each vertex after the first has a placed neighbour
  std::vector<int> order;
  VertexMask seen = 0;
  for (int s : mask_vertices(root.vertices())) {
    if (seen & bit(s)) continue;
    seen |= bit(s);
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (int u : mask_vertices(root.neighbors(order[i])))
        if (!(seen & bit(u))) {
          seen |= bit(u);
          order.push_back(u);
        }
  }
  std::vector<Vertex> phi(static_cast<std::size_t>(root.slots()), -1);
  std::vector<char> used(static_cast<std::size_t>(g.id_bound()), 0);

  auto fits = [&](int v, Vertex x) {
    if (used[x] || g.degree(x) != true_degree(root, v)) return false;
    for (int u : mask_vertices(root.neighbors(v)))
      if (phi[u] >= 0 && !g.has_edge(x, phi[u])) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int v = order[i];
    std::vector<Vertex> cands;
    int placed = -1;
    for (int u : mask_vertices(root.neighbors(v)))
      if (phi[u] >= 0) placed = u;
    if (placed >= 0)
      cands = g.neighbors(phi[placed]);
    else
      cands = g.vertices();
    for (Vertex x : cands) {
      if (!fits(v, x)) continue;
      phi[v] = x;
      used[x] = 1;
      if (self(self, i + 1)) return true;
      used[x] = 0;
      phi[v] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return {};
  return phi;
}

std::uint64_t trial_seed(std::uint64_t base, long index) {
  std::uint64_t z = base + (static_cast<std::uint64_t>(index) + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

TrialPlan plan_trials(const Instance& inst, const Measure& m, double safety, std::uint64_t seed,
                      long max_trials) {
  if (!(safety > 0)) throw InputError("safety factor must be positive");
  if (max_trials < 1) throw InputError("trial cap must be positive");
  const double mu = to_double(evaluate(m, inst));
  const double want = std::ceil(std::exp2(mu)) * safety;
  TrialPlan p;
  p.base_seed = seed;
  p.trials = want >= static_cast<double>(max_trials) ? max_trials : std::max(1L, static_cast<long>(std::ceil(want)));
  return p;
}

namespace {

struct Residual {
  Graph g;
  long k = 0;
  std::vector<Vertex> taken;
  std::vector<ChainFold> folds;
};

void simplify_fully(Residual& r) {
  for (;;) {
    Instance cur{r.g, r.k};
    auto site = find_site(cur);
    if (!site) return;
    Reduction red = apply_recorded(cur, *site);
    r.taken.insert(r.taken.end(), red.forced.begin(), red.forced.end());
    if (red.fold) r.folds.push_back(*red.fold);
    r.g = std::move(red.result.graph);
    r.k = red.result.budget;
  }
}

void take(Residual& r, const std::vector<Vertex>& vs) {
  for (Vertex v : vs) r.g.remove_vertex(v);
  r.taken.insert(r.taken.end(), vs.begin(), vs.end());
  r.k -= static_cast<long>(vs.size());
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.id_bound()), 0);
  for (Vertex s : g.vertices()) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex u : g.neighbors(comp[i]))
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    out.push_back(std::move(comp));
  }
  return out;
}

Graph induced(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<char> in(static_cast<std::size_t>(g.id_bound()), 0);
  for (Vertex v : keep) in[v] = 1;
  std::vector<Vertex> drop;
  for (Vertex v : g.vertices())
    if (!in[v]) drop.push_back(v);
  return delete_vertices(g, drop);
}

bool branch_cover(const Graph& g, long k, std::vector<Vertex>& out) {
  if (g.num_edges() == 0) return true;
  if (k <= 0) return false;
  Vertex v = -1;
  for (Vertex x : g.vertices())
    if (v < 0 || g.degree(x) > g.degree(v)) v = x;
  const std::size_t mark = out.size();
  out.push_back(v);
  if (branch_cover(delete_vertices(g, std::vector<Vertex>{v}), k - 1, out)) return true;
  out.resize(mark);
  const std::vector<Vertex>& nb = g.neighbors(v);
  if (static_cast<long>(nb.size()) > k) return false;
  out.insert(out.end(), nb.begin(), nb.end());
  if (branch_cover(delete_vertices(g, nb), k - static_cast<long>(nb.size()), out)) return true;
  out.resize(mark);
  return false;
}

// Exact decision used when a k-mode measure has run out.
bool exact_fallback(Residual& r) {
  std::vector<Vertex> cover;
  for (const auto& comp : components(r.g)) {
    if (comp.size() < 2) continue;
    Graph sub = induced(r.g, comp);
    if (comp.size() <= 64) {
      std::vector<Vertex> c = exact_cover(sub);
      cover.insert(cover.end(), c.begin(), c.end());
    } else if (!branch_cover(sub, r.k - static_cast<long>(cover.size()), cover)) {
      return false;
    }
    if (static_cast<long>(cover.size()) > r.k) return false;
  }
  take(r, cover);
  return r.k >= 0;
}

struct Located {
  int subspace = 0;
  const RuleTable* table = nullptr;
  MatchResult match;
};

Located locate(const Graph& g, const RuleBook& book) {
  Located at;
  at.subspace = classify(g);
  at.table = book.find(at.subspace);
  if (!at.table) throw InputError("no rule table for " + subspace_name(at.subspace));
  std::vector<Vertex> anchor = find_anchor(at.table->tree.root().config, g);
  if (anchor.empty())
    throw CertificateViolation("root configuration of " + subspace_name(at.subspace) + " does not occur");
  at.match = match_instance(at.table->tree, g, std::move(anchor));
  return at;
}

std::vector<Vertex> images(VertexMask m, const std::vector<Vertex>& phi) {
  std::vector<Vertex> out;
  for (int v : mask_vertices(m)) out.push_back(phi.at(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Applies a constant leaf: the matched component is solved exactly.
void solve_component(Residual& r, const TreeNode& leaf, const std::vector<Vertex>& phi) {
  std::vector<Vertex> comp = images(leaf.config.vertices(), phi);
  std::vector<Vertex> c = exact_cover(induced(r.g, comp));
  std::vector<Vertex> rest;
  std::sort(c.begin(), c.end());
  for (Vertex v : comp)
    if (!std::binary_search(c.begin(), c.end(), v)) rest.push_back(v);
  take(r, c);
  for (Vertex v : rest) r.g.remove_vertex(v);
}

[[noreturn]] void bad_leaf(const Located& at) {
  const TreeNode& n = at.table->tree.nodes[at.match.leaf];
  throw CertificateViolation("instance reached " + to_string(n.kind) + " leaf " + std::to_string(at.match.leaf) +
                             " of " + subspace_name(at.subspace));
}

bool measure_spent(const Residual& r, const Measure& m) {
  return m.mode == MeasureMode::k_mode && evaluate(m, Instance{r.g, r.k}) <= 0;
}

// Cover of the input graph from a finished residual.
std::vector<Vertex> finish(const Residual& r, const Instance& input) {
  std::vector<Vertex> cover = r.taken;
  for (auto it = r.folds.rbegin(); it != r.folds.rend(); ++it) unfold(*it, cover);
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  if (!is_vertex_cover(input.graph, cover) || static_cast<long>(cover.size()) > input.budget)
    throw CertificateViolation("constructed set is not a cover within budget");
  return cover;
}

}  // namespace

SearchResult rsearch(const Instance& inst, const RuleBook& book, const Measure& m, std::uint64_t seed,
                     bool trace) {
  SearchResult out;
  std::mt19937_64 rng(seed);
  Residual r{inst.graph, inst.budget, {}, {}};
  for (;;) {
    simplify_fully(r);
    if (r.k < 0) return out;
    if (r.g.num_edges() == 0) break;
    if (measure_spent(r, m)) {
      ++out.fallbacks;
      if (!exact_fallback(r)) return out;
      break;
    }
    const Located at = locate(r.g, book);
    const TreeNode& leaf = at.table->tree.nodes[at.match.leaf];
    if (leaf.kind == NodeKind::constant) {
      solve_component(r, leaf, at.match.embedding);
      continue;
    }
    if (leaf.kind != NodeKind::rule) bad_leaf(at);

    const double mu = to_double(evaluate(m, Instance{r.g, r.k}));
    std::vector<std::vector<Vertex>> branches;
    std::vector<double> child_mu;
    for (std::size_t i = 0; i < leaf.branches.size(); ++i) {
      branches.push_back(images(leaf.branches[i], at.match.embedding));
      Instance child{delete_vertices(r.g, branches.back()), r.k - static_cast<long>(branches.back().size())};
      child_mu.push_back(to_double(evaluate(m, child)));
    }
    const std::vector<double> p = branch_probabilities(leaf.weights, child_mu, mu);
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    std::size_t pick = p.size() - 1;
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      acc += p[i];
      if (u < acc) {
        pick = i;
        break;
      }
    }
    if (trace) out.trace.push_back(TraceStep{at.subspace, at.match.leaf, branches[pick], p[pick], p});
    take(r, branches[pick]);
  }
  out.yes = true;
  out.cover = finish(r, inst);
  return out;
}

std::vector<double> branch_probabilities(std::span<const double> weights, std::span<const double> child_mu,
                                         double mu) {
  if (weights.size() != child_mu.size() || weights.empty())
    throw ContractError("branch_probabilities: mismatched or empty inputs");
  std::vector<double> p(weights.size());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = weights[i] * std::exp2(child_mu[i] - mu);
    total += p[i];
  }
  if (!(total > 0.0)) throw ContractError("branch_probabilities: zero total weight");
  for (double& x : p) x /= total;
  return p;
}

SolveResult solve_randomized(const Instance& inst, const RuleBook& book, const Measure& m,
                             const TrialPlan& plan, bool trace) {
  SolveResult out;
  for (long t = 0; t < plan.trials; ++t) {
    SearchResult s = rsearch(inst, book, m, trial_seed(plan.base_seed, t), trace);
    ++out.trials_run;
    out.fallbacks += s.fallbacks;
    out.trace = std::move(s.trace);
    if (s.yes) {
      out.yes = true;
      out.cover = std::move(s.cover);
      break;
    }
  }
  return out;
}

namespace {

bool dfs(Residual r, const RuleBook& book, const Measure& m, int& fallbacks, Residual& done) {
  for (;;) {
    simplify_fully(r);
    if (r.k < 0) return false;
    if (r.g.num_edges() == 0) break;
    if (measure_spent(r, m)) {
      ++fallbacks;
      if (!exact_fallback(r)) return false;
      break;
    }
    const Located at = locate(r.g, book);
    if (at.table->mode != RuleKind::deterministic)
      throw InputError("deterministic search needs deterministic tables; " + subspace_name(at.subspace) +
                       " is randomized");
    const TreeNode& leaf = at.table->tree.nodes[at.match.leaf];
    if (leaf.kind == NodeKind::constant) {
      solve_component(r, leaf, at.match.embedding);
      continue;
    }
    if (leaf.kind != NodeKind::rule) bad_leaf(at);
    for (VertexMask b : leaf.branches) {
      Residual child = r;
      take(child, images(b, at.match.embedding));
      if (dfs(std::move(child), book, m, fallbacks, done)) return true;
    }
    return false;
  }
  done = std::move(r);
  return true;
}

}  // namespace

SolveResult solve_deterministic(const Instance& inst, const RuleBook& book, const Measure& m) {
  SolveResult out;
  out.trials_run = 1;
  Residual done;
  if (dfs(Residual{inst.graph, inst.budget, {}, {}}, book, m, out.fallbacks, done)) {
    out.yes = true;
    out.cover = finish(done, inst);
  }
  return out;
}

}  // namespace vcgen
