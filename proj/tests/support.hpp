#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "vcgen/graph.hpp"
#include "vcgen/local_config.hpp"

namespace testing_support {

using vcgen::Graph;
using vcgen::LocalConfiguration;
using vcgen::Vertex;

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph clique(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph claw() { return from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Random graph of maximum degree 3: `attempts` random pairs, each kept when
// both endpoints still have room.
inline Graph random_subcubic(int n, int attempts, std::mt19937_64& rng) {
  Graph g(n);
  if (n < 2) return g;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < attempts; ++i) {
    int u = pick(rng), v = pick(rng);
    if (u == v || g.has_edge(u, v) || g.degree(u) >= 3 || g.degree(v) >= 3) continue;
    g.add_edge(u, v);
  }
  return g;
}

// Subset enumeration, independent of the library's branching oracle.
inline int brute_force_vc(const Graph& g) {
  std::vector<Vertex> vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  auto edges = g.edges();
  int best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size >= best) continue;
    bool ok = true;
    for (auto [a, b] : edges) {
      auto ia = std::find(vs.begin(), vs.end(), a) - vs.begin();
      auto ib = std::find(vs.begin(), vs.end(), b) - vs.begin();
      if (!(s >> ia & 1) && !(s >> ib & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Same configuration with vertex slot v renamed to perm[v].
inline LocalConfiguration permute(const LocalConfiguration& l, const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  LocalConfiguration out(l.delta());
  for (std::size_t i = 0; i < perm.size(); ++i) out.add_vertex(l.incomplete(inv[i]));
  for (int v = 0; v < l.slots(); ++v)
    for (int u : vcgen::mask_vertices(l.neighbors(v)))
      if (v < u) out.add_edge(perm[v], perm[u]);
  return out;
}

inline LocalConfiguration make_config(const std::vector<int>& d, const std::vector<std::pair<int, int>>& edges,
                                      int delta = 3) {
  LocalConfiguration l(delta);
  for (int x : d) l.add_vertex(x);
  for (auto [u, v] : edges) l.add_edge(u, v);
  return l;
}

// Every connected configuration with at most `max_vertices` vertices, true
// degrees within 1..3 and incomplete counts making up the rest, one per
// edge set / d assignment (not deduplicated by isomorphism).
inline void for_each_config(int max_vertices, const std::function<void(const LocalConfiguration&)>& fn) {
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::uint32_t masks = 1u << pairs.size();
    for (std::uint32_t em = 0; em < masks; ++em) {
      std::vector<int> deg(n, 0);
      std::vector<std::pair<int, int>> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (em >> e & 1) {
          edges.push_back(pairs[e]);
          ++deg[pairs[e].first];
          ++deg[pairs[e].second];
        }
      if (*std::max_element(deg.begin(), deg.end()) > 3) continue;
      // connected?
      std::vector<int> seen{0};
      std::vector<char> mark(n, 0);
      mark[0] = 1;
      for (std::size_t i = 0; i < seen.size(); ++i)
        for (auto [a, b] : edges) {
          int o = a == seen[i] ? b : b == seen[i] ? a : -1;
          if (o >= 0 && !mark[o]) {
            mark[o] = 1;
            seen.push_back(o);
          }
        }
      if (static_cast<int>(seen.size()) != n) continue;
      // every d with deg + d in 1..3
      std::vector<int> d(n, 0);
      for (;;) {
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && deg[i] + d[i] >= 1;
        if (ok) fn(make_config(d, edges));
        int i = 0;
        while (i < n && d[i] == 3 - deg[i]) d[i++] = 0;
        if (i == n) break;
        ++d[i];
      }
    }
  }
}

inline std::vector<LocalConfiguration> config_corpus(int max_vertices) {
  std::vector<LocalConfiguration> out;
  for_each_config(max_vertices, [&](const LocalConfiguration& l) { out.push_back(l); });
  return out;
}

}  // namespace testing_support
