#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "vcgen/branching.hpp"
#include "vcgen/expansion_tree.hpp"
#include "vcgen/local_config.hpp"
#include "vcgen/lp.hpp"
#include "vcgen/measure.hpp"

namespace vcgen {

struct GenLimits {
  int max_depth = 12;
  long max_nodes = 200000;
  double seconds = 600.0;
  // Configurations above this many vertices stop the search.
  int max_config_vertices = kCanonicalCap;
};

struct GenMetadata {
  long nodes = 0;
  long rules = 0;
  long references = 0;
  long simplifications = 0;
  long constants = 0;
  long unreachable = 0;
  int depth_reached = 0;
  bool limit_hit = false;
  std::string limit;  // which limit stopped generation, empty when none

  bool operator==(const GenMetadata&) const = default;
};

struct RuleTable {
  int subspace_id = 0;  // 0: a free-standing root, not one of P1..P19
  Measure measure;
  RuleKind mode = RuleKind::randomized;
  int delta = 3;
  Assertions assertions;
  ExpansionTree tree;
  GenMetadata metadata;
};

// Covering program for one configuration and branch set: crucial
// requirements, per-branch satisfied requirement indices and rounded costs.
struct RuleProblem {
  std::vector<Branch> branches;
  std::vector<Requirement> crucial;
  std::vector<std::vector<int>> satisfied;
  std::vector<double> costs;

  CoverProgram program() const {
    return CoverProgram{costs, satisfied, static_cast<int>(crucial.size())};
  }
};

RuleProblem build_problem(const LocalConfiguration& l, std::span<const Branch> branches,
                          const Measure& m, const Assertions& a);

// What the generator saw at one branching attempt.
struct NodeObservation {
  std::string config;
  std::size_t branches = 0;
  std::size_t requirements = 0;
  bool lp_feasible = false;
  double lp_objective = 0.0;
  bool ilp_solved = false;
  bool ilp_feasible = false;
  double ilp_objective = 0.0;
  bool accepted = false;
  const RuleProblem* problem = nullptr;  // pruned program; valid during the callback only
};

using GenObserver = std::function<void(const NodeObservation&)>;

struct GenerationReport {
  bool success = false;
  RuleTable table;  // complete on success, partial otherwise
  std::string reason;
  // describe() of every configuration from the root down to the blocker
  std::vector<std::string> chain;
};

// Generates a rule table from `root`. Throws InputError when the
// measure fails its feasibility check.
GenerationReport gensa(const LocalConfiguration& root, const Measure& m, int delta, RuleKind mode,
                       const Assertions& a, const GenLimits& limits, const GenObserver& observer = {},
                       int subspace_id = 0);

// gensa on root_config(id) with assertions_for(id).
GenerationReport generate_subspace(int id, const Measure& m, RuleKind mode, const GenLimits& limits,
                                   const GenObserver& observer = {});

struct LeafCheck {
  int node = -1;
  bool pass = false;
  double min_coverage = 0.0;
  double objective = 0.0;
  std::string problem;  // empty when pass
};

struct Certificate {
  bool pass = false;
  bool measure_feasible = false;
  std::vector<std::string> measure_violations;
  std::vector<LeafCheck> leaves;    // one per rule leaf
  std::vector<std::string> failures;  // every failed check, human readable
  long nodes_checked = 0;
};

// Independent recheck of a finished table.
Certificate verify_table(const RuleTable& t);

std::string to_string(RuleKind kind);
RuleKind parse_rule_kind(const std::string& text);

// JSON rule-table file.
void write_table(std::ostream& out, const RuleTable& t);
std::string table_to_json(const RuleTable& t);
RuleTable read_table(std::istream& in);
RuleTable table_from_json(const std::string& text);

// Shortest decimal that reads back as the same double.
std::string format_double(double x);

}  // namespace vcgen
