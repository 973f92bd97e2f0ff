#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vcgen/graph.hpp"

namespace vcgen {

// Vertex subsets of a configuration. Configurations stay small, so a 32-bit
// mask covers every vertex slot.
using VertexMask = std::uint32_t;

inline constexpr int kMaxConfigSlots = 32;
inline constexpr int kCanonicalCap = 16;

inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline int popcount(VertexMask m) { return std::popcount(m); }

std::vector<int> mask_vertices(VertexMask m);

// A graph fragment H plus, for every vertex, the number of incident edges of
// the surrounding instance that H does not show (incomplete edges).
// Invariant: deg_H(v) + d(v) <= delta for every present vertex.
class LocalConfiguration {
 public:
  explicit LocalConfiguration(int delta = 3) : delta_(delta) {}

  int add_vertex(int incomplete);
  void add_edge(int u, int v);
  void set_incomplete(int v, int count);

  int delta() const { return delta_; }
  // Number of identifier slots; removed vertices keep their slot.
  int slots() const { return static_cast<int>(adj_.size()); }
  int size() const { return popcount(present_); }
  VertexMask vertices() const { return present_; }
  bool present(int v) const { return v >= 0 && v < slots() && (present_ & bit(v)); }

  VertexMask neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return (adj_[u] & bit(v)) != 0; }
  int degree(int v) const { return popcount(adj_[v]); }
  int incomplete(int v) const { return d_[v]; }
  int num_edges() const;

  // H minus `removed`; incomplete counts of survivors are kept as they are.
  LocalConfiguration without(VertexMask removed) const;

  // H as a Graph with identical identifiers; absent slots are removed vertices.
  Graph to_graph() const;

  bool operator==(const LocalConfiguration& other) const = default;

 private:
  int delta_;
  std::vector<VertexMask> adj_;
  std::vector<int> d_;
  VertexMask present_ = 0;
};

// Boundary set: vertices with at least one incomplete edge.
VertexMask boundary(const LocalConfiguration& l);

// deg_H(v) + d(v); the degree v has in every instance expanding l.
int true_degree(const LocalConfiguration& l, int v);

// How a child of expand() differs from its parent.
struct ExpansionLabel {
  enum class Kind { internal, fresh };
  Kind kind = Kind::internal;
  // internal: the existing boundary vertex joined to the selected vertex.
  // fresh: the true degree of the newly added vertex.
  int value = 0;

  bool operator==(const ExpansionLabel&) const = default;
  auto operator<=>(const ExpansionLabel&) const = default;
};

std::string to_string(const ExpansionLabel& label);
ExpansionLabel parse_label(const std::string& text);

struct ExpansionChild {
  ExpansionLabel label;
  LocalConfiguration config;
  int selected = -1;  // the vertex whose incomplete edge was resolved
  int other = -1;     // the other endpoint of the new edge
};

// Boundary vertex whose incomplete edge expand() resolves: smallest
// (d, deg_H, identifier).
int select_boundary_vertex(const LocalConfiguration& l);

// Covering set of children: one per boundary vertex u != v not adjacent to v,
// then one per fresh-vertex true degree 1..delta. Throws ContractError if the
// boundary is empty.
std::vector<ExpansionChild> expand(const LocalConfiguration& l, int delta);

// Injective edge-preserving map small -> big conserving true degree, or
// nullopt. Exhaustive search; configurations are small.
std::optional<std::vector<int>> is_expansion(const LocalConfiguration& big,
                                             const LocalConfiguration& small);

struct CanonicalForm {
  std::string key;
  // order[i] is the vertex placed at canonical position i.
  std::vector<int> order;
};

// Equal keys iff the configurations are isomorphic respecting d.
// Throws CapacityError above kCanonicalCap vertices.
CanonicalForm canonical_form(const LocalConfiguration& l);
std::string canonical_key(const LocalConfiguration& l);

// Graph text format plus `d <v> <count>` lines and a `delta <n>` line.
void write_config(std::ostream& out, const LocalConfiguration& l);
LocalConfiguration read_config(std::istream& in);
std::string describe(const LocalConfiguration& l);

}  // namespace vcgen
