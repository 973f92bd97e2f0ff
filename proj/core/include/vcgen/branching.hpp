#pragma once

#include <span>
#include <vector>

#include "vcgen/local_config.hpp"
#include "vcgen/measure.hpp"
#include "vcgen/requirements.hpp"

namespace vcgen {

// Vertices committed to the cover in one child. Never empty.
using Branch = VertexMask;

inline constexpr int kBranchSeedCap = 16;

// Facts known about every instance reached, used to pick the cost lemma and
// to prune expansions.
struct Assertions {
  bool no_degree_le1 = false;
  bool no_deg3_with_two_deg2 = false;
  bool no_degree_2 = false;
  // Structures of subspaces 1..excluded_below-1 never occur.
  int excluded_below = 0;

  bool operator==(const Assertions&) const = default;
};

// 12: general bound; 13: no degree-3 vertex has two degree-2 neighbours;
// 14: no degree-2 vertices.
int cost_lemma(const Assertions& a);

struct BoundaryProfile {
  int d31 = 0, d32 = 0, d21 = 0;  // taken boundary vertices by (true degree, d)
  int d33 = 0, d22 = 0;           // all-incomplete vertices, counted per edge
  int r21 = 0, r22 = 0, r11 = 0;  // remaining ones by (true degree after, d)

  bool operator==(const BoundaryProfile&) const = default;
};

struct CostBound {
  Rational exponent;
  int lemma = 12;
  Rational dk, dn1, dn2, dn3;
  BoundaryProfile profile;
};

// All nonempty subsets of V(H), ascending by mask.
std::vector<Branch> seed_branches(const LocalConfiguration& l);

// prev ∪ {b+u} ∪ {b+v} ∪ {b+u+v} for b in prev, deduplicated, ascending.
std::vector<Branch> extend_branches(std::span<const Branch> prev, int u, int v);

// H - take with incomplete counts of the survivors unchanged.
LocalConfiguration apply_branch(const LocalConfiguration& l, Branch b);

// Exponent of the lemma's upper bound on 2^(mu(b(I)) - mu(I)).
CostBound cost_bound(const LocalConfiguration& l, Branch b, const Measure& m, int lemma);
CostBound cost_bound(const LocalConfiguration& l, Branch b, const Measure& m, const Assertions& a);

// Relative upward margin applied to costs before they enter LP coefficients.
inline constexpr double kCostMargin = 1.0 / 1099511627776.0;  // 2^-40

// 2^exponent, rounded up by kCostMargin; exact for integer exponents.
double rounded_cost(const Rational& exponent);

// Removes every branch that costs at least as much as a surviving branch
// whose satisfied requirements include its own. Among equals the earlier
// branch survives. `satisfied[i]` lists requirement indices, ascending.
std::vector<std::size_t> prune_dominated(std::span<const double> costs,
                                         std::span<const std::vector<int>> satisfied);

std::vector<Branch> prune_dominated(const LocalConfiguration& l, std::span<const Branch> branches,
                                    std::span<const Requirement> crucial, const Measure& m,
                                    const Assertions& a);

}  // namespace vcgen
