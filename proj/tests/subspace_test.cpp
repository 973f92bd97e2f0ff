#include <gtest/gtest.h>

#include <iostream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "support.hpp"
#include "vcgen/local_config.hpp"
#include "vcgen/runtime.hpp"
#include "vcgen/simplify.hpp"
#include "vcgen/subspace.hpp"

using namespace vcgen;
using namespace testing_support;

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

struct Cycle {
  std::vector<int> vertices;
  EdgeSet edges;
};

// Simple cycles up to length 8 by DFS from each cycle's smallest vertex.
std::vector<Cycle> all_cycles(const Graph& g) {
  std::set<EdgeSet> seen;
  std::vector<Cycle> out;
  std::vector<int> path;
  std::function<void(int, int)> dfs = [&](int s, int v) {
    for (int u : g.neighbors(v)) {
      if (u == s && path.size() >= 3) {
        Cycle c{path, {}};
        for (std::size_t i = 0; i < path.size(); ++i) {
          int a = path[i], b = path[(i + 1) % path.size()];
          c.edges.insert({std::min(a, b), std::max(a, b)});
        }
        if (seen.insert(c.edges).second) out.push_back(c);
        continue;
      }
      if (u <= s || path.size() >= 8 || std::find(path.begin(), path.end(), u) != path.end()) continue;
      path.push_back(u);
      dfs(s, u);
      path.pop_back();
    }
  };
  for (int s : g.vertices()) {
    path = {s};
    dfs(s, s);
  }
  return out;
}

int shared(const Cycle& a, const Cycle& b) {
  int n = 0;
  for (const auto& e : a.edges) n += b.edges.count(e);
  return n;
}

// Independent reading of the partition.
int oracle_classify(const Graph& g) {
  std::vector<Vertex> vs = g.vertices();
  for (int v : vs)
    if (g.degree(v) <= 1) return 1;
  for (int v : vs) {
    if (g.degree(v) != 3) continue;
    int twos = 0;
    for (int u : g.neighbors(v)) twos += g.degree(u) == 2;
    if (twos >= 2) return 2;
  }
  auto cycles = all_cycles(g);
  auto len = [](const Cycle& c) { return static_cast<int>(c.vertices.size()); };
  for (int L = 4; L <= 6; ++L)
    for (const auto& c : cycles) {
      if (len(c) != L) continue;
      int twos = 0, threes = 0;
      for (int v : c.vertices) (g.degree(v) == 2 ? twos : threes)++;
      if (twos == 1 && threes == L - 1) return L - 1;
    }
  for (int v : vs)
    if (g.degree(v) == 2) return 6;
  auto any_len = [&](int L) {
    for (const auto& c : cycles)
      if (len(c) == L) return true;
    return false;
  };
  auto pair_with = [&](int la, int lb, auto pred) {
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (std::size_t j = 0; j < cycles.size(); ++j) {
        if (i == j) continue;
        const auto &a = cycles[i], &b = cycles[j];
        if (len(a) == la && len(b) == lb && pred(shared(a, b))) return true;
      }
    return false;
  };
  auto some = [](int s) { return s >= 1; };
  if (any_len(3)) return 7;
  if (any_len(4)) return 8;
  if (pair_with(5, 5, some)) return 9;
  if (pair_with(5, 7, some)) return 10;
  if (any_len(5)) return 11;
  if (pair_with(6, 6, some)) return 12;
  if (any_len(6)) return 13;
  if (pair_with(7, 7, [](int s) { return s == 3; })) return 14;
  if (pair_with(7, 7, [](int s) { return s == 2; })) return 15;
  if (pair_with(7, 7, [](int s) { return s == 1; })) return 16;
  if (any_len(7)) return 17;
  if (any_len(8)) return 18;
  return 19;
}

Graph relabel(const Graph& g, std::mt19937_64& rng) {
  const int n = g.id_bound();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph h(n);
  for (int v : g.vertices())
    for (int u : g.neighbors(v))
      if (v < u) h.add_edge(perm[v], perm[u]);
  for (int v = 0; v < n; ++v)
    if (!g.contains(v)) h.remove_vertex(perm[v]);
  return h;
}

// Random graphs with minimum degree 2, where the later subspaces live.
Graph random_dense(int n, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_subcubic(n, 40 * n, rng);
    bool ok = true;
    for (int v : g.vertices()) ok = ok && g.degree(v) >= 2;
    if (ok) return g;
  }
}

// Random cubic graph by pairing half-edges, retried until simple; larger n
// reaches the high-girth subspaces.
Graph random_cubic(int n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> half;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < 3; ++i) half.push_back(v);
    std::shuffle(half.begin(), half.end(), rng);
    Graph g(n);
    bool ok = true;
    for (std::size_t i = 0; i < half.size() && ok; i += 2) {
      ok = half[i] != half[i + 1] && !g.has_edge(half[i], half[i + 1]);
      if (ok) g.add_edge(half[i], half[i + 1]);
    }
    if (ok) return g;
  }
}

Graph generalized_petersen(int n, int k) {
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n + i);
    g.add_edge(n + i, n + (i + k) % n);
  }
  return g;
}

// Cubic graph grown by joining deficient vertices that are far apart;
// retried until every vertex reaches degree 3.
Graph random_high_girth(int n, int girth, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Graph g(n);
    for (;;) {
      std::vector<std::pair<int, int>> options;
      for (int u = 0; u < n; ++u) {
        if (g.degree(u) >= 3) continue;
        std::vector<int> dist(n, -1);
        std::vector<int> q{u};
        dist[u] = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
          for (int w : g.neighbors(q[i]))
            if (dist[w] < 0) {
              dist[w] = dist[q[i]] + 1;
              q.push_back(w);
            }
        for (int v = u + 1; v < n; ++v)
          if (g.degree(v) < 3 && (dist[v] < 0 || dist[v] >= girth - 1)) options.emplace_back(u, v);
      }
      if (options.empty()) break;
      auto [u, v] = options[rng() % options.size()];
      g.add_edge(u, v);
    }
    bool cubic = true;
    for (int v = 0; v < n; ++v) cubic = cubic && g.degree(v) == 3;
    if (cubic) return g;
  }
  return generalized_petersen(n / 2, 2);
}

Graph mixed_corpus(int t, std::mt19937_64& rng) {
  switch (t % 6) {
    case 4: {
      const int n = 5 + static_cast<int>(rng() % 12);
      return generalized_petersen(n, 1 + static_cast<int>(rng() % ((n - 1) / 2)));
    }
    case 5: return random_high_girth(2 * (8 + static_cast<int>(rng() % 6)), 5 + static_cast<int>(rng() % 3), rng);
    case 0: {
      const int n = 4 + static_cast<int>(rng() % 13);
      return random_subcubic(n, 2 * n, rng);
    }
    case 1: return random_dense(4 + static_cast<int>(rng() % 13), rng);
    default: return random_cubic(2 * (5 + static_cast<int>(rng() % 9)), rng);
  }
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify(clique(4)), 7);
  EXPECT_EQ(classify(cycle(8)), 6);
  EXPECT_EQ(classify(petersen()), 9);
  EXPECT_EQ(classify(claw()), 1);
  EXPECT_THROW(classify(from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})), InputError);
}

TEST(Classify, MatchesIndependentOracle) {
  std::mt19937_64 rng(61);
  std::map<int, int> hits;
  for (int t = 0; t < 3000; ++t) {
    Graph g = mixed_corpus(t, rng);
    const int want = oracle_classify(g);
    ASSERT_EQ(classify(g), want) << "trial " << t;
    ++hits[want];
  }
  for (auto [id, n] : hits) std::cout << "P" << id << ":" << n << " ";
  std::cout << "\n";
  // the corpus reaches most of the partition
  EXPECT_GE(hits.size(), 12u);
}

TEST(Classify, StableUnderRelabeling) {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 500; ++t) {
    Graph g = random_dense(6 + static_cast<int>(rng() % 10), rng);
    ASSERT_EQ(classify(g), classify(relabel(g, rng)));
  }
}

TEST(Classify, LemmaPreconditionsHold) {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 1500; ++t) {
    Graph g = random_dense(4 + static_cast<int>(rng() % 12), rng);
    const int id = classify(g);
    for (int v : g.vertices()) {
      if (id >= 7) ASSERT_NE(g.degree(v), 2);
      if (id >= 3 && g.degree(v) == 3) {
        int twos = 0;
        for (int u : g.neighbors(v)) twos += g.degree(u) == 2;
        ASSERT_LT(twos, 2);
      }
      if (id >= 2) ASSERT_GE(g.degree(v), 2);
    }
  }
}

TEST(Subspace, Names) {
  EXPECT_EQ(subspace_name(7), "P7");
  EXPECT_EQ(parse_subspace("P19"), 19);
  EXPECT_EQ(parse_subspace("p3"), 3);
  EXPECT_EQ(parse_subspace("12"), 12);
  EXPECT_THROW(parse_subspace("P20"), InputError);
  EXPECT_THROW(parse_subspace("Q1"), InputError);
}

TEST(Subspace, RootExamples) {
  LocalConfiguration p19 = root_config(19);
  EXPECT_EQ(p19.size(), 1);
  EXPECT_EQ(p19.incomplete(0), 3);
  LocalConfiguration p7 = root_config(7);
  EXPECT_EQ(p7.size(), 3);
  EXPECT_EQ(p7.num_edges(), 3);
  for (int v = 0; v < 3; ++v) EXPECT_EQ(p7.incomplete(v), 1);
  LocalConfiguration p6 = root_config(6);
  EXPECT_EQ(p6.size(), 1);
  EXPECT_EQ(p6.incomplete(0), 2);
  LocalConfiguration p3 = root_config(3);
  EXPECT_EQ(p3.size(), 4);
  int twos = 0;
  for (int v = 0; v < 4; ++v) twos += true_degree(p3, v) == 2;
  EXPECT_EQ(twos, 1);
}

TEST(Subspace, Assertions) {
  for (int id = 1; id <= kSubspaceCount; ++id) {
    SubspaceDescriptor d = describe_subspace(id);
    EXPECT_EQ(d.assertions.no_degree_le1, id >= 2);
    EXPECT_EQ(d.assertions.no_deg3_with_two_deg2, id >= 3);
    EXPECT_EQ(d.assertions.no_degree_2, id >= 7);
    EXPECT_EQ(d.cost_lemma, id >= 7 ? 14 : id >= 3 ? 13 : 12);
  }
}

TEST(ContainsForbidden, Examples) {
  LocalConfiguration tri = make_config({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(contains_forbidden(tri, 7));
  EXPECT_TRUE(contains_forbidden(tri, 8));
  EXPECT_TRUE(contains_forbidden(make_config({2}, {}), 7));
  EXPECT_FALSE(contains_forbidden(make_config({3}, {}), 19));
  // an open path says nothing about cycles
  EXPECT_FALSE(contains_forbidden(make_config({2, 1, 1, 2}, {{0, 1}, {1, 2}, {2, 3}}), 19));
}

// Every graph of a subspace contains its root configuration at some anchor.
TEST(Subspace, RootAnchorsEveryInstance) {
  std::mt19937_64 rng(64);
  std::map<int, int> hits;
  for (int t = 0; t < 3000; ++t) {
    Graph g = mixed_corpus(t, rng);
    if (find_site(Instance{g, 100})) continue;
    const int id = classify(g);
    ++hits[id];
    auto anchor = find_anchor(root_config(id), g);
    ASSERT_FALSE(anchor.empty()) << "P" << id << " trial " << t;
  }
  EXPECT_GE(hits.size(), 8u);
}
