#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcgen/graph.hpp"
#include "vcgen/measure.hpp"
#include "vcgen/rulegen.hpp"

namespace vcgen {

// One rule table per subspace.
class RuleBook {
 public:
  // Throws InputError for a table without a subspace id or a duplicate.
  void add(RuleTable t);
  const RuleTable* find(int subspace_id) const;
  // Subspaces 1..19 that have no table.
  std::vector<int> missing() const;

 private:
  std::array<std::optional<RuleTable>, 20> tables_;
};

struct TraceStep {
  int subspace = 0;
  int leaf = -1;
  std::vector<Vertex> branch;
  double probability = 1.0;
  std::vector<double> distribution;  // p_i of every branch at this step
};

// p_i = w_i * 2^(mu_i - mu), normalized to sum to one.
std::vector<double> branch_probabilities(std::span<const double> weights, std::span<const double> child_mu,
                                         double mu);

// `<subspace> <leaf-id> <branch> <p_i>`, e.g. `P19 14 {2,7} 0.25`.
std::string format_trace(const TraceStep& step);

struct SearchResult {
  bool yes = false;
  // On YES: a verified cover of the input graph with at most budget vertices.
  std::vector<Vertex> cover;
  std::vector<TraceStep> trace;
  // Residual instances decided by the exact fallback (k-mode, mu <= 0).
  int fallbacks = 0;
};

// Finds the first (lexicographic) embedding of `root` into g under which
// every root vertex keeps its true degree; empty when none exists.
std::vector<Vertex> find_anchor(const LocalConfiguration& root, const Graph& g);

// One random root-to-leaf walk. Throws CertificateViolation when the tables
// do not cover a reached instance.
SearchResult rsearch(const Instance& inst, const RuleBook& book, const Measure& m, std::uint64_t seed,
                     bool trace = false);

struct TrialPlan {
  long trials = 1;
  std::uint64_t base_seed = 0;
};

// trials = ceil(2^mu(I)) * safety, clipped to [1, max_trials].
TrialPlan plan_trials(const Instance& inst, const Measure& m, double safety, std::uint64_t seed,
                      long max_trials);

// Seed of trial `index`, derived from the plan's base seed.
std::uint64_t trial_seed(std::uint64_t base, long index);

struct SolveResult {
  bool yes = false;
  long trials_run = 0;
  std::vector<Vertex> cover;
  std::vector<TraceStep> trace;  // of the deciding trial (or the last one)
  int fallbacks = 0;
};

SolveResult solve_randomized(const Instance& inst, const RuleBook& book, const Measure& m,
                             const TrialPlan& plan, bool trace = false);

// Explores every branch of deterministic rules. Throws InputError when a
// needed table is randomized.
SolveResult solve_deterministic(const Instance& inst, const RuleBook& book, const Measure& m);

}  // namespace vcgen
