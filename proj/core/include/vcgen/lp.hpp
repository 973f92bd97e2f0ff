#pragma once

#include <span>
#include <vector>

namespace vcgen {

// Covering program over branches:
//   minimize   sum_i w_i * cost_i
//   subject to sum_{i : r in satisfied_i} w_i >= 1   for every requirement r
//              0 <= w_i <= 1          (LP)   or   w_i in {0, 1}   (ILP)
struct CoverProgram {
  std::span<const double> costs;
  std::span<const std::vector<int>> satisfied;  // requirement indices per branch
  int num_requirements = 0;
};

struct CoverSolution {
  bool feasible = false;
  std::vector<double> weights;
  double objective = 0.0;
};

// Primal simplex with Bland's rule on the packing dual; the covering weights
// are read off the optimal dual prices. Returns a basic optimal solution.
CoverSolution solve_lp(const CoverProgram& p);

// Exact 0/1 optimum by depth-first branch-and-bound over which branch covers
// the most constrained uncovered requirement, pruned by LP bounds when more
// than kIlpExhaustiveCap branches remain.
CoverSolution solve_ilp(const CoverProgram& p);

inline constexpr std::size_t kIlpExhaustiveCap = 20;

// Rounds weights up onto the grid 2^-30 and tops up any requirement left
// below 1, so coverage can be checked exactly in floating point.
std::vector<double> snap_weights(const CoverProgram& p, std::span<const double> weights);

// Smallest coverage over all requirements (exact for snapped weights).
double min_coverage(const CoverProgram& p, std::span<const double> weights);

double objective(std::span<const double> costs, std::span<const double> weights);

}  // namespace vcgen
