#include <gtest/gtest.h>

#include "support.hpp"
#include "vcgen/measure.hpp"
#include "vcgen/simplify.hpp"

using namespace vcgen;
using namespace testing_support;

static bool yes(const Instance& inst) { return inst.budget >= 0 && vc_oracle(inst.graph) <= inst.budget; }

TEST(FindSite, Examples) {
  EXPECT_FALSE(find_site(Instance{clique(4), 3}));

  auto claw_site = find_site(Instance{claw(), 1});
  ASSERT_TRUE(claw_site);
  EXPECT_EQ(claw_site->rule_id, 2);
  EXPECT_EQ(claw_site->witness, (std::vector<Vertex>{1}));

  // C6 with pendants on alternate vertices: the pendants fire rule 2 first
  Graph c6 = cycle(6);
  for (int i = 0; i < 6; i += 2) c6.add_edge(i, c6.add_vertex());
  auto s = find_site(Instance{c6, 3});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->rule_id, 2);
}

TEST(FindSite, RulePriority) {
  Graph g(1);
  EXPECT_EQ(find_site(Instance{g, 0})->rule_id, 1);
  EXPECT_EQ(find_site(Instance{cycle(3), 2})->rule_id, 3);
  EXPECT_EQ(find_site(Instance{cycle(5), 3})->rule_id, 4);
}

TEST(Apply, ClawRuleTwo) {
  Instance out = apply(Instance{claw(), 1}, SimplificationSite{2, {1}});
  EXPECT_EQ(out.budget, 0);
  EXPECT_EQ(out.graph.num_vertices(), 2);
  EXPECT_EQ(out.graph.num_edges(), 0);
  EXPECT_TRUE(yes(out));
}

TEST(Apply, C5ChainFoldGivesTriangle) {
  Instance in{cycle(5), 3};
  Instance out = apply(in, SimplificationSite{4, {1, 2}});
  EXPECT_EQ(out.budget, 2);
  EXPECT_EQ(out.graph.num_vertices(), 3);
  EXPECT_EQ(out.graph.num_edges(), 3);
  EXPECT_EQ(vc_oracle(in.graph), 3);
  EXPECT_EQ(vc_oracle(out.graph), 2);
}

TEST(Apply, AlternatingSquare) {
  // square a-b-c-d; a, c degree 2; b, d each with one more neighbour
  Graph g = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {3, 5}});
  Instance in{g, 2};
  Reduction r = apply_recorded(in, SimplificationSite{5, {0, 1, 2, 3}});
  EXPECT_EQ(r.result.budget, 0);
  EXPECT_EQ(r.result.graph.num_vertices(), 2);
  EXPECT_EQ(r.forced, (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(yes(in), yes(r.result));
}

TEST(Apply, StaleSiteIsAContractError) {
  EXPECT_THROW(apply(Instance{clique(4), 3}, SimplificationSite{2, {0}}), ContractError);
  EXPECT_THROW(apply(Instance{cycle(5), 3}, SimplificationSite{4, {0, 2}}), ContractError);
  EXPECT_THROW(apply(Instance{cycle(5), 3}, SimplificationSite{5, {0, 1, 2, 3}}), ContractError);
  EXPECT_THROW(apply(Instance{cycle(5), 3}, SimplificationSite{9, {0}}), ContractError);
}

TEST(Apply, DegreeTwoFourCycleIsClearedWhole) {
  Instance out = apply(Instance{cycle(4), 2}, *find_site(Instance{cycle(4), 2}));
  EXPECT_EQ(out.graph.num_vertices(), 0);
  EXPECT_EQ(out.budget, 0);
}

TEST(ConfigSite, Examples) {
  auto s = config_site(make_config({0, 2}, {{0, 1}}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->rule_id, 2);
  EXPECT_FALSE(config_site(make_config({3}, {})));
  // apex 0 of true degree 2, base vertices of true degree 3
  auto t = config_site(make_config({0, 1, 1}, {{0, 1}, {0, 2}, {1, 2}}));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->rule_id, 3);
}

TEST(ConfigSite, UnknownAdjacencyDoesNotFireRuleThree) {
  // v has true degree 2 but only one visible neighbour
  EXPECT_FALSE(config_site(make_config({1, 2}, {{0, 1}})));
}

// Reduction to a fixpoint, verifying the answer, the measures and the cover
// reconstruction at every step.
TEST(Simplify, AnswerAndMeasurePreservedOnRandomCorpus) {
  std::mt19937_64 rng(31);
  const Measure m1 = mu1(), m2 = mu2();
  int applications = 0;
  for (int t = 0; t < 1500; ++t) {
    int n = 2 + static_cast<int>(rng() % 13);
    Instance inst{random_subcubic(n, static_cast<int>(rng() % (2 * n + 1)), rng), 0};
    inst.budget = vc_oracle(inst.graph) - static_cast<long>(rng() % 2);
    while (auto site = find_site(inst)) {
      Reduction r = apply_recorded(inst, *site);
      ASSERT_EQ(yes(inst), yes(r.result)) << "rule " << site->rule_id;
      ASSERT_EQ(vc_oracle(inst.graph), vc_oracle(r.result.graph) + (inst.budget - r.result.budget));
      EXPECT_LE(evaluate(m1, r.result), evaluate(m1, inst));
      EXPECT_LE(evaluate(m2, r.result), evaluate(m2, inst));
      EXPECT_LT(r.result.graph.num_vertices() + r.result.budget, inst.graph.num_vertices() + inst.budget);
      inst = r.result;
      ++applications;
    }
  }
  EXPECT_GT(applications, 3000);
}

TEST(Simplify, UnfoldRebuildsACover) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 500; ++t) {
    Instance orig{random_subcubic(12, 20, rng), 12};
    Instance inst = orig;
    std::vector<Vertex> taken;
    std::vector<ChainFold> folds;
    while (auto site = find_site(inst)) {
      Reduction r = apply_recorded(inst, *site);
      taken.insert(taken.end(), r.forced.begin(), r.forced.end());
      if (r.fold) folds.push_back(*r.fold);
      inst = r.result;
    }
    std::vector<Vertex> cover = exact_cover(inst.graph);
    cover.insert(cover.end(), taken.begin(), taken.end());
    for (auto it = folds.rbegin(); it != folds.rend(); ++it) unfold(*it, cover);
    EXPECT_TRUE(is_vertex_cover(orig.graph, cover));
    EXPECT_EQ(static_cast<int>(cover.size()), vc_oracle(orig.graph));
  }
}
