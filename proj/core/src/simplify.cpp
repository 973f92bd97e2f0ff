#include "vcgen/simplify.hpp"

#include <algorithm>

namespace vcgen {

namespace {

// Shared site search. `deg(v)` is the degree the rule reasons about (the
// instance degree, or the true degree of a configuration vertex);
// `complete(v)` says whether all of v's edges are visible in `g`.
template <class Deg, class Complete>
std::optional<SimplificationSite> search(const Graph& g, Deg deg, Complete complete) {
  const std::vector<Vertex> verts = g.vertices();
  for (Vertex v : verts)
    if (deg(v) == 0) return SimplificationSite{1, {v}};
  for (Vertex v : verts)
    if (deg(v) == 1) return SimplificationSite{2, {v}};
  for (Vertex v : verts) {
    if (deg(v) != 2 || !complete(v)) continue;
    const auto& nb = g.neighbors(v);
    if (g.has_edge(nb[0], nb[1])) return SimplificationSite{3, {v}};
  }
  for (Vertex u : verts) {
    if (deg(u) != 2) continue;
    for (Vertex v : g.neighbors(u))
      if (u < v && deg(v) == 2) return SimplificationSite{4, {u, v}};
  }
  std::optional<Cycle> best;
  for (const Cycle& c : enumerate_cycles(g, kAlternatingCycleCap)) {
    if (c.size() % 2 != 0) continue;
    for (int phase = 0; phase < 2; ++phase) {
      bool ok = true;
      for (std::size_t i = 0; i < c.size() && ok; ++i) {
        bool low = (i % 2 == static_cast<std::size_t>(phase));
        ok = low ? deg(c[i]) == 2 : deg(c[i]) >= 3;
      }
      if (ok && (!best || c < *best)) best = c;
    }
  }
  if (best) return SimplificationSite{5, *best};
  return std::nullopt;
}

}  // namespace

std::optional<SimplificationSite> find_site(const Instance& inst) {
  const Graph& g = inst.graph;
  return search(g, [&](Vertex v) { return g.degree(v); }, [](Vertex) { return true; });
}

std::optional<SimplificationSite> config_site(const LocalConfiguration& l) {
  const Graph g = l.to_graph();
  return search(
      g, [&](Vertex v) { return true_degree(l, v); },
      [&](Vertex v) { return l.incomplete(v) == 0; });
}

Reduction apply_recorded(const Instance& inst, const SimplificationSite& site) {
  const Graph& g = inst.graph;
  auto stale = [&] { throw ContractError("simplification site does not apply"); };
  for (Vertex v : site.witness)
    if (!g.contains(v)) stale();

  Reduction out{inst, {}, std::nullopt};
  Graph& h = out.result.graph;
  switch (site.rule_id) {
    case 1: {
      Vertex v = site.witness.at(0);
      if (g.degree(v) != 0) stale();
      h.remove_vertex(v);
      break;
    }
    case 2: {
      Vertex v = site.witness.at(0);
      if (g.degree(v) != 1) stale();
      Vertex w = g.neighbors(v)[0];
      out.forced.push_back(w);
      h.remove_vertex(v);
      h.remove_vertex(w);
      out.result.budget -= 1;
      break;
    }
    case 3: {
      Vertex v = site.witness.at(0);
      if (g.degree(v) != 2) stale();
      Vertex a = g.neighbors(v)[0], b = g.neighbors(v)[1];
      if (!g.has_edge(a, b)) stale();
      out.forced = {a, b};
      h.remove_vertex(v);
      h.remove_vertex(a);
      h.remove_vertex(b);
      out.result.budget -= 2;
      break;
    }
    case 4: {
      if (site.witness.size() != 2) stale();
      Vertex u = site.witness[0], v = site.witness[1];
      if (!g.has_edge(u, v) || g.degree(u) != 2 || g.degree(v) != 2) stale();
      Vertex x = g.neighbors(u)[0] == v ? g.neighbors(u)[1] : g.neighbors(u)[0];
      Vertex y = g.neighbors(v)[0] == u ? g.neighbors(v)[1] : g.neighbors(v)[0];
      if (x == y) stale();  // a triangle; rule 3 territory
      if (g.has_edge(x, y) && g.degree(x) == 2 && g.degree(y) == 2) {
        // A 4-cycle component of degree-2 vertices: fold and then clear the
        // resulting lone edge in one step.
        out.forced = {u, y};
        for (Vertex z : {u, v, x, y}) h.remove_vertex(z);
        out.result.budget -= 2;
        break;
      }
      h.remove_vertex(u);
      h.remove_vertex(v);
      h.add_edge(x, y);
      out.fold = ChainFold{u, v, x, y};
      out.result.budget -= 1;
      break;
    }
    case 5: {
      const Cycle& c = site.witness;
      if (c.size() < 4 || c.size() % 2 != 0) stale();
      std::vector<Vertex> high;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const Vertex a = c[i], b = c[(i + 1) % c.size()];
        if (!g.has_edge(a, b)) stale();
        if (g.degree(a) >= 3) high.push_back(a);
        else if (g.degree(a) != 2) stale();
        if ((g.degree(a) == 2) == (g.degree(b) == 2)) stale();
      }
      out.forced = high;
      for (Vertex z : c) h.remove_vertex(z);
      out.result.budget -= static_cast<long>(c.size() / 2);
      break;
    }
    default:
      stale();
  }
  return out;
}

Instance apply(const Instance& inst, const SimplificationSite& site) {
  return apply_recorded(inst, site).result;
}

void unfold(const ChainFold& fold, std::vector<Vertex>& cover) {
  const bool has_x = std::find(cover.begin(), cover.end(), fold.x) != cover.end();
  cover.push_back(has_x ? fold.v : fold.u);
}

}  // namespace vcgen
