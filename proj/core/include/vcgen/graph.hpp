#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vcgen/error.hpp"

namespace vcgen {

using Vertex = int;
using Cycle = std::vector<Vertex>;

// Simple undirected graph over dense 0-based identifiers. Deleting a vertex
// leaves a gap: identifiers are never renumbered, so embeddings stay valid.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  Vertex add_vertex();
  // Ignores an edge that is already present; throws on self-loops.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void remove_vertex(Vertex v);

  bool contains(Vertex v) const {
    return v >= 0 && v < id_bound() && alive_[v];
  }
  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  // Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  int id_bound() const { return static_cast<int>(adj_.size()); }
  int num_vertices() const { return alive_count_; }
  int num_edges() const { return edge_count_; }
  int max_degree() const;
  std::vector<Vertex> vertices() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> alive_;
  int alive_count_ = 0;
  int edge_count_ = 0;
};

struct Instance {
  Graph graph;
  long budget = 0;
};

Graph delete_vertices(const Graph& g, std::span<const Vertex> s);

inline constexpr int kOracleCap = 24;

// Exact minimum vertex cover size. Throws CapacityError above kOracleCap vertices.
int vc_oracle(const Graph& g);

// A minimum vertex cover, as instance identifiers. Works up to 64 vertices;
// meant for small residual components, not as a general solver.
std::vector<Vertex> exact_cover(const Graph& g);

// Minimum vertex cover size of the graph given as bitmask adjacency over
// at most 64 compact indices; `alive` selects the vertices that exist.
int min_cover_size(std::span<const std::uint64_t> adj, std::uint64_t alive);
std::uint64_t min_cover_set(std::span<const std::uint64_t> adj, std::uint64_t alive);

// Every simple cycle of length 3..max_len exactly once. Each cycle starts at
// its smallest vertex and continues toward the smaller of that vertex's two
// cycle neighbours.
std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len);

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

}  // namespace vcgen
