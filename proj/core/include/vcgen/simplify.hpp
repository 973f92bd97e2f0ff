#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vcgen/graph.hpp"
#include "vcgen/local_config.hpp"

namespace vcgen {

// Rule ids, in priority order:
//   1 isolated vertex, 2 degree-1 vertex, 3 degree-2 triangle,
//   4 degree-2 chain, 5 alternating cycle.
struct SimplificationSite {
  int rule_id = 0;
  // 1, 2, 3: the low-degree vertex. 4: the adjacent degree-2 pair, ascending.
  // 5: the cycle in canonical rotation.
  std::vector<Vertex> witness;

  bool operator==(const SimplificationSite&) const = default;
};

// Alternating cycles are searched up to this length.
inline constexpr int kAlternatingCycleCap = 8;

// Lowest-numbered applicable rule with its lexicographically smallest witness.
std::optional<SimplificationSite> find_site(const Instance& inst);

// Same search on a configuration, using true degrees; fires only when the
// rule's structure is certain from the configuration alone.
std::optional<SimplificationSite> config_site(const LocalConfiguration& l);

// Bookkeeping needed to turn a cover of the reduced instance back into a
// cover of the original one.
struct ChainFold {
  Vertex u = -1, v = -1;  // removed degree-2 pair
  Vertex x = -1, y = -1;  // x adjacent to u, y adjacent to v
};

struct Reduction {
  Instance result;
  std::vector<Vertex> forced;  // vertices known to be in some optimal cover
  std::optional<ChainFold> fold;
};

// Answer-preserving reduction. Throws ContractError if the site does not
// apply to `inst`.
Reduction apply_recorded(const Instance& inst, const SimplificationSite& site);
Instance apply(const Instance& inst, const SimplificationSite& site);

// Adds the fold's pair vertex that keeps `cover` a cover after un-folding.
void unfold(const ChainFold& fold, std::vector<Vertex>& cover);

}  // namespace vcgen
