#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"
#include "vcgen/rulegen.hpp"
#include "vcgen/runtime.hpp"
#include "vcgen/simplify.hpp"
#include "vcgen/subspace.hpp"

using namespace vcgen;
using namespace testing_support;

static const Measure kPureK = parse_measure("k-mode a=1");

static int first_of(const RuleTable& t, NodeKind kind) {
  for (std::size_t i = 0; i < t.tree.nodes.size(); ++i)
    if (t.tree.nodes[i].kind == kind) return static_cast<int>(i);
  return -1;
}

TEST(Gensa, LoneVertexPureK) {
  auto r = gensa(make_config({3}, {}), kPureK, 3, RuleKind::deterministic, Assertions{}, GenLimits{});
  ASSERT_TRUE(r.success) << r.reason;
  Certificate c = verify_table(r.table);
  EXPECT_TRUE(c.pass);
  EXPECT_FALSE(c.leaves.empty());
  for (const auto& leaf : c.leaves) EXPECT_LE(leaf.objective, 1.0);
}

TEST(Gensa, EmptyBoundaryIsConstant) {
  auto r = gensa(make_config({0, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), kPureK, 3,
                 RuleKind::deterministic, Assertions{}, GenLimits{});
  ASSERT_TRUE(r.success);
  ASSERT_EQ(r.table.tree.nodes.size(), 1u);
  EXPECT_EQ(r.table.tree.root().kind, NodeKind::constant);
}

TEST(Gensa, TinyWeightFailsWithChain) {
  GenLimits limits;
  limits.max_depth = 3;
  auto r = generate_subspace(19, parse_measure("n-mode b3=0.001"), RuleKind::randomized, limits);
  EXPECT_FALSE(r.success);
  EXPECT_FALSE(r.reason.empty());
  EXPECT_GE(r.chain.size(), 2u);
}

TEST(Gensa, RejectsInfeasibleMeasure) {
  EXPECT_THROW(gensa(make_config({3}, {}), parse_measure("n-mode a=1 b3=0.1"), 3, RuleKind::randomized,
                     Assertions{}, GenLimits{}),
               InputError);
}

TEST(Gensa, EdgeRuleExample) {
  LocalConfiguration e = make_config({2, 2}, {{0, 1}});
  std::vector<Branch> bs{bit(0), bit(1)};
  RuleProblem p = build_problem(e, bs, kPureK, Assertions{});
  EXPECT_EQ(p.crucial, (std::vector<Requirement>{bit(0), bit(1)}));
  EXPECT_EQ(p.costs, (std::vector<double>{0.5, 0.5}));
  auto lp = solve_lp(p.program());
  EXPECT_EQ(lp.objective, 1.0);
}

TEST(Gensa, DeterministicAndRoundTrips) {
  const Measure m = parse_measure("n-mode b3=0.2");
  for (int id : {2, 6, 12, 19}) {
    auto a = generate_subspace(id, m, RuleKind::randomized, GenLimits{});
    auto b = generate_subspace(id, m, RuleKind::randomized, GenLimits{});
    ASSERT_TRUE(a.success) << "P" << id << ": " << a.reason;
    const std::string ja = table_to_json(a.table);
    EXPECT_EQ(ja, table_to_json(b.table));
    RuleTable back = table_from_json(ja);
    EXPECT_EQ(table_to_json(back), ja);
    EXPECT_TRUE(verify_table(back).pass);
  }
}

TEST(Gensa, StoredObjectivesMatchRecheck) {
  auto r = generate_subspace(19, parse_measure("n-mode b3=0.2"), RuleKind::randomized, GenLimits{});
  ASSERT_TRUE(r.success);
  Certificate c = verify_table(r.table);
  ASSERT_TRUE(c.pass);
  for (const auto& leaf : c.leaves)
    EXPECT_NEAR(leaf.objective, r.table.tree.nodes[leaf.node].objective, 1e-9);
}

TEST(Gensa, LpNeverAboveIlp) {
  int both = 0;
  GenObserver obs = [&](const NodeObservation& o) {
    if (o.lp_feasible && o.ilp_solved && o.ilp_feasible) {
      ++both;
      EXPECT_LE(o.lp_objective, o.ilp_objective + 1e-9) << o.config;
    }
  };
  for (int id = 1; id <= kSubspaceCount; ++id) {
    generate_subspace(id, parse_measure("n-mode b3=0.2"), RuleKind::deterministic, GenLimits{}, obs);
    generate_subspace(id, mu2(), RuleKind::deterministic, GenLimits{}, obs);
  }
  EXPECT_GT(both, 0);
}

TEST(Verify, TamperedWeightFails) {
  auto r = gensa(make_config({3}, {}), kPureK, 3, RuleKind::deterministic, Assertions{}, GenLimits{});
  ASSERT_TRUE(r.success);
  RuleTable t = r.table;
  const int leaf = first_of(t, NodeKind::rule);
  ASSERT_GE(leaf, 0);
  t.tree.nodes[leaf].weights[0] -= 0.5;
  Certificate c = verify_table(t);
  EXPECT_FALSE(c.pass);
  bool named = false;
  for (const auto& l : c.leaves) named = named || (l.node == leaf && !l.pass);
  EXPECT_TRUE(named);
}

TEST(Verify, RemovedChildFails) {
  auto r = generate_subspace(19, parse_measure("n-mode b3=0.2"), RuleKind::randomized, GenLimits{});
  ASSERT_TRUE(r.success);
  RuleTable t = r.table;
  const int node = first_of(t, NodeKind::expanded);
  ASSERT_GE(node, 0);
  t.tree.nodes[node].children.pop_back();
  EXPECT_FALSE(verify_table(t).pass);
}

TEST(Verify, WrongRootFails) {
  auto r = generate_subspace(19, kPureK, RuleKind::deterministic, GenLimits{});
  ASSERT_TRUE(r.success);
  RuleTable t = r.table;
  t.subspace_id = 7;
  EXPECT_FALSE(verify_table(t).pass);
}

TEST(TableIo, RejectsGarbage) {
  EXPECT_THROW(table_from_json("{}"), InputError);
  EXPECT_THROW(table_from_json("not json"), InputError);
  auto r = generate_subspace(19, kPureK, RuleKind::deterministic, GenLimits{});
  std::string j = table_to_json(r.table);
  j.replace(j.find("vcgen-rule-table"), 16, "something-else!!");
  EXPECT_THROW(table_from_json(j), InputError);
}

TEST(TableIo, FormatDouble) {
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.5), "0.5");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

// Instances of a subspace never walk into a node pruned as unreachable.
TEST(Gensa, UnreachableNodesNeverVisited) {
  std::mt19937_64 rng(71);
  const Measure m = parse_measure("n-mode b3=0.2");
  std::vector<RuleTable> tables;
  for (int id = 1; id <= kSubspaceCount; ++id) {
    auto r = generate_subspace(id, m, RuleKind::randomized, GenLimits{});
    ASSERT_TRUE(r.success);
    tables.push_back(r.table);
  }
  int walks = 0;
  for (int t = 0; t < 3000; ++t) {
    Graph g = random_subcubic(6 + static_cast<int>(rng() % 12), 40, rng);
    if (g.num_edges() == 0 || find_site(Instance{g, 100})) continue;
    const int id = classify(g);
    const RuleTable& table = tables[id - 1];
    auto anchor = find_anchor(table.tree.root().config, g);
    ASSERT_FALSE(anchor.empty());
    MatchResult mr = match_instance(table.tree, g, anchor);
    for (int node : mr.path) ASSERT_NE(table.tree.nodes[node].kind, NodeKind::unreachable);
    ++walks;
  }
  EXPECT_GT(walks, 100);
}
