#pragma once

#include <string>

#include "vcgen/branching.hpp"
#include "vcgen/graph.hpp"
#include "vcgen/local_config.hpp"

namespace vcgen {

inline constexpr int kSubspaceCount = 19;

// "P1".."P19"
std::string subspace_name(int id);
// Accepts "P7", "p7" or "7". Throws InputError otherwise.
int parse_subspace(const std::string& text);

// Does subspace `id`'s defining structure occur in g (ignoring earlier
// subspaces)? Throws InputError for ids outside 1..18.
bool detect(int id, const Graph& g);

// Smallest id whose structure occurs; 19 when none does.
// Throws InputError when the maximum degree exceeds 3.
int classify(const Graph& g);

struct SubspaceDescriptor {
  int id = 0;
  Assertions assertions;
  LocalConfiguration root;
  int cost_lemma = 12;
};

SubspaceDescriptor describe_subspace(int id);
Assertions assertions_for(int id);
LocalConfiguration root_config(int id);

// True iff the structure of some subspace below `id` is present in H using
// complete edges and true degrees only.
bool contains_forbidden(const LocalConfiguration& l, int id);

}  // namespace vcgen
