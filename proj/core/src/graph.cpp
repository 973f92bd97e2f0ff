#include "vcgen/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

namespace vcgen {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n)), alive_(static_cast<std::size_t>(n), 1), alive_count_(n) {}

Vertex Graph::add_vertex() {
  adj_.emplace_back();
  alive_.push_back(1);
  ++alive_count_;
  return id_bound() - 1;
}

void Graph::check(Vertex v) const {
  if (!contains(v)) throw InputError("unknown vertex " + std::to_string(v));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) return;
  nu.erase(it);
  auto& nv = adj_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
}

void Graph::remove_vertex(Vertex v) {
  check(v);
  for (Vertex u : adj_[v]) {
    auto& nu = adj_[u];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
  }
  edge_count_ -= degree(v);
  adj_[v].clear();
  alive_[v] = 0;
  --alive_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < id_bound(); ++v)
    if (alive_[v]) best = std::max(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(alive_count_));
  for (Vertex v = 0; v < id_bound(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < id_bound(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s)
    if (!g.contains(v)) throw InputError("cannot delete unknown vertex " + std::to_string(v));
  Graph out = g;
  for (Vertex v : s)
    if (out.contains(v)) out.remove_vertex(v);
  return out;
}

namespace {

struct CompactGraph {
  std::vector<Vertex> ids;
  std::vector<std::uint64_t> adj;
  std::uint64_t alive = 0;
};

CompactGraph compact(const Graph& g, int cap) {
  CompactGraph c;
  c.ids = g.vertices();
  if (static_cast<int>(c.ids.size()) > cap)
    throw CapacityError("graph has " + std::to_string(c.ids.size()) + " vertices; cap is " +
                        std::to_string(cap));
  std::unordered_map<Vertex, int> index;
  for (int i = 0; i < static_cast<int>(c.ids.size()); ++i) index[c.ids[i]] = i;
  c.adj.assign(c.ids.size(), 0);
  for (int i = 0; i < static_cast<int>(c.ids.size()); ++i)
    for (Vertex u : g.neighbors(c.ids[i])) c.adj[i] |= std::uint64_t{1} << index[u];
  c.alive = c.ids.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c.ids.size()) - 1;
  return c;
}

// Branch on a maximum-degree vertex; degree-1 vertices force their neighbour.
// Returns the cover size and fills `chosen` with one optimal cover.
int cover_rec(std::span<const std::uint64_t> adj, std::uint64_t alive, std::uint64_t* chosen) {
  int taken = 0;
  std::uint64_t picked = 0;
  for (;;) {
    int best = -1;
    int best_deg = 0;
    int leaf_neighbor = -1;
    for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int deg = std::popcount(adj[v] & alive);
      if (deg == 1) {
        leaf_neighbor = std::countr_zero(adj[v] & alive);
        break;
      }
      if (deg > best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    if (leaf_neighbor >= 0) {
      alive &= ~(std::uint64_t{1} << leaf_neighbor);
      picked |= std::uint64_t{1} << leaf_neighbor;
      ++taken;
      continue;
    }
    if (best_deg == 0) {
      if (chosen) *chosen = picked;
      return taken;
    }
    if (best_deg == 2) {
      // Every component is a cycle: ceil(len/2) each.
      std::uint64_t rest = alive;
      std::uint64_t cover = 0;
      while (rest) {
        int start = std::countr_zero(rest);
        if (std::popcount(adj[start] & alive) == 0) {
          rest &= ~(std::uint64_t{1} << start);
          continue;
        }
        // walk the cycle and take every other vertex, plus one extra if odd
        int prev = -1, cur = start, idx = 0;
        do {
          rest &= ~(std::uint64_t{1} << cur);
          if (idx % 2 == 1) cover |= std::uint64_t{1} << cur;
          std::uint64_t nb = adj[cur] & alive;
          int nxt = std::countr_zero(nb);
          if (nxt == prev) nxt = std::countr_zero(nb & ~(std::uint64_t{1} << nxt));
          prev = cur;
          cur = nxt;
          ++idx;
        } while (cur != start);
        if (idx % 2 == 1) cover |= std::uint64_t{1} << start;
      }
      if (chosen) *chosen = picked | cover;
      return taken + std::popcount(cover);
    }
    const std::uint64_t bit = std::uint64_t{1} << best;
    const std::uint64_t nb = adj[best] & alive;
    std::uint64_t with_v = 0, with_n = 0;
    int a = 1 + cover_rec(adj, alive & ~bit, chosen ? &with_v : nullptr);
    int b = std::popcount(nb) + cover_rec(adj, alive & ~bit & ~nb, chosen ? &with_n : nullptr);
    if (a <= b) {
      if (chosen) *chosen = picked | with_v | bit;
      return taken + a;
    }
    if (chosen) *chosen = picked | with_n | nb;
    return taken + b;
  }
}

}  // namespace

int min_cover_size(std::span<const std::uint64_t> adj, std::uint64_t alive) {
  return cover_rec(adj, alive, nullptr);
}

std::uint64_t min_cover_set(std::span<const std::uint64_t> adj, std::uint64_t alive) {
  std::uint64_t chosen = 0;
  cover_rec(adj, alive, &chosen);
  return chosen;
}

int vc_oracle(const Graph& g) {
  CompactGraph c = compact(g, kOracleCap);
  return min_cover_size(c.adj, c.alive);
}

std::vector<Vertex> exact_cover(const Graph& g) {
  CompactGraph c = compact(g, 64);
  std::uint64_t set = min_cover_set(c.adj, c.alive);
  std::vector<Vertex> out;
  for (; set != 0; set &= set - 1) out.push_back(c.ids[std::countr_zero(set)]);
  return out;
}

std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len) {
  std::vector<Cycle> out;
  if (max_len < 3) return out;
  Cycle path;
  std::vector<char> on_path(static_cast<std::size_t>(g.id_bound()), 0);

  auto dfs = [&](auto&& self, Vertex start, Vertex cur) -> void {
    for (Vertex next : g.neighbors(cur)) {
      if (next == start) {
        if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (next < start || on_path[next] || static_cast<int>(path.size()) >= max_len) continue;
      on_path[next] = 1;
      path.push_back(next);
      self(self, start, next);
      path.pop_back();
      on_path[next] = 0;
    }
  };

  for (Vertex s : g.vertices()) {
    path.assign(1, s);
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  return out;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<char> in(static_cast<std::size_t>(g.id_bound()), 0);
  for (Vertex v : cover)
    if (v >= 0 && v < g.id_bound()) in[v] = 1;
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

}  // namespace vcgen
