#include <gtest/gtest.h>

#include "graphs.hpp"
#include "hyperell/engine.hpp"
#include "hyperell/testkit.hpp"

using namespace hyperell;
using namespace hyperell::testing;

namespace {

constexpr Flavor kFlavors[] = {Flavor::Dgon, Flavor::Sgon, Flavor::Sdgon};

}  // namespace

TEST(Engine, TreesAreYes) {
  const Multigraph t = from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
  for (Flavor f : kFlavors) {
    const Verdict v = run(t, f);
    EXPECT_TRUE(v.yes);
    EXPECT_TRUE(v.is_tree);
    EXPECT_EQ(v.reason, Reason::ReducedToEmpty);
  }
}

TEST(Engine, GoldenGraphs) {
  EXPECT_FALSE(run(figure_top(), Flavor::Dgon).yes);
  EXPECT_TRUE(run(figure_top(), Flavor::Sgon).yes);
  EXPECT_TRUE(run(figure_top(), Flavor::Sdgon).yes);
  EXPECT_TRUE(run(figure_bottom(), Flavor::Dgon).yes);
  EXPECT_FALSE(run(figure_bottom(), Flavor::Sgon).yes);
  EXPECT_TRUE(run(figure_bottom(), Flavor::Sdgon).yes);
}

TEST(Engine, CompleteBipartiteRejected) {
  for (Flavor f : kFlavors) {
    const Verdict v = run(complete_bipartite(3, 3), f);
    EXPECT_FALSE(v.yes);
    EXPECT_EQ(v.reason, Reason::TreewidthReject);
  }
}

TEST(Engine, WithoutPrecheckK4IsStuck) {
  EngineOptions opt;
  opt.treewidth_precheck = false;
  for (Flavor f : kFlavors) {
    const Verdict v = run(complete(4), f, opt);
    EXPECT_FALSE(v.yes);
    EXPECT_EQ(v.reason, Reason::Stuck);
  }
  Multigraph k4 = complete(4);
  EXPECT_FALSE(step(k4, Flavor::Dgon));
}

TEST(Engine, EmptyGraph) {
  for (Flavor f : kFlavors) EXPECT_TRUE(run(Multigraph(), f).yes);
}

TEST(Engine, Disconnected) {
  const Multigraph two_trees = from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
  const Multigraph three_trees = from_edges(5, {{0, 1}, {2, 3}});
  const Multigraph tree_and_cycle = from_edges(5, {{0, 1}, {2, 3}, {3, 4}, {4, 2}});
  for (Flavor f : kFlavors) {
    const Verdict a = run(two_trees, f);
    EXPECT_TRUE(a.yes);
    EXPECT_EQ(a.reason, Reason::TwoTrees);
    EXPECT_FALSE(run(three_trees, f).yes);
    const Verdict c = run(tree_and_cycle, f);
    EXPECT_FALSE(c.yes);
    EXPECT_EQ(c.reason, Reason::Disconnected);
  }
}

TEST(Engine, ConstraintJoinsComponents) {
  Multigraph g(2);
  g.add_constraint(vid(0), vid(1));
  EXPECT_TRUE(run(g, Flavor::Sgon).yes);
  EXPECT_TRUE(run(g, Flavor::Sdgon).yes);
}

TEST(Engine, EagerConflict) {
  Multigraph g = path(3);
  g.add_constraint(vid(0), vid(1));
  g.add_constraint(vid(0), vid(2));
  for (Flavor f : kFlavors) EXPECT_EQ(run(g, f).reason, Reason::ConflictingConstraints);
}

TEST(Engine, EagerDegreeMismatch) {
  // Every leaf and degree-2 vertex is constrained; leaf 0 is linked to a
  // degree-3 vertex.
  Multigraph g = from_edges(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  g.add_constraint(vid(0), vid(1));
  g.add_constraint(vid(2), vid(3));
  EXPECT_EQ(run(g, Flavor::Sgon).reason, Reason::DegreeMismatch);
  EngineOptions lazy;
  lazy.eager_no = false;
  EXPECT_FALSE(run(g, Flavor::Sgon, lazy).yes);
}

TEST(Engine, Budget) {
  EXPECT_EQ(rule_application_budget(10, Flavor::Dgon), 30u);
  EXPECT_EQ(rule_application_budget(0, Flavor::Dgon), 0u);
  EXPECT_EQ(rule_application_budget(0, Flavor::Sgon), 0u);
  EXPECT_EQ(rule_application_budget(10, Flavor::Sgon), 100u);
}

TEST(Engine, StepEndRules) {
  Multigraph one(1);
  const auto s = step(one, Flavor::Dgon);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->rule.kind, RuleKind::E1);
  EXPECT_TRUE(one.empty());

  Multigraph edge = path(2);
  edge.add_constraint(vid(0), vid(1));
  Multigraph copy = edge;
  EXPECT_EQ(step(edge, Flavor::Dgon)->rule.kind, RuleKind::E2);
  EXPECT_EQ(step(copy, Flavor::Sgon)->rule.kind, RuleKind::P1);
  EXPECT_EQ(step(copy, Flavor::Sgon)->rule.kind, RuleKind::E3);
}

TEST(Engine, PriorityMustPermuteDefault) {
  EngineOptions opt;
  opt.priority = {RuleKind::T1};
  EXPECT_THROW(run(cycle(3), Flavor::Dgon, opt), std::invalid_argument);
  const auto def = default_priority(Flavor::Sgon);
  opt.priority.assign(def.rbegin(), def.rend());
  EXPECT_TRUE(run(cycle(3), Flavor::Sgon, opt).yes);
}

TEST(Engine, ManyPermutationsAgree) {
  for (const Multigraph& g : small_corpus(51, 20, 9, 14)) {
    for (Flavor f : kFlavors) {
      const bool base = run(g, f).yes;
      EngineOptions opt;
      opt.keep_trace = false;
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        opt.shuffle_seed = seed;
        ASSERT_EQ(run(g, f, opt).yes, base);
      }
    }
  }
}

TEST(Engine, TraceReplayAndProgress) {
  for (const Multigraph& g : small_corpus(52, 400, 10, 16)) {
    for (Flavor f : kFlavors) {
      const Verdict v = run(g, f);
      if (v.reason == Reason::TwoTrees || v.reason == Reason::Disconnected) continue;
      ASSERT_EQ(v.trace.size(), v.preprocess_steps + v.main_steps);
      Multigraph h = g;
      for (std::size_t i = 0; i < v.trace.size(); ++i) {
        const ReductionStep& s = v.trace[i];
        const std::size_t pot = potential(h);
        replay_step(h, s);
        if (f != Flavor::Dgon) {
          EXPECT_LT(potential(h), pot);
        } else if (i >= v.preprocess_steps) {
          EXPECT_TRUE(!s.removed_vertices.empty() || s.removed_edges >= 2) << s.rule;
        }
      }
      if (v.yes) EXPECT_TRUE(h.empty());
      if (v.reason == Reason::Stuck) EXPECT_FALSE(step(h, f));
      EXPECT_LE(v.main_steps, v.budget);
    }
  }
}

TEST(Engine, BettiAtMostOneIsStableYes) {
  for (const Multigraph& g : small_corpus(53, 500, 10, 16)) {
    if (g.betti() <= 1) EXPECT_TRUE(run(g, Flavor::Sgon).yes);
  }
}

TEST(Engine, ScaleSeriesParallel) {
  SeriesParallelShape shape;
  shape.target_edges = 40000;
  const Multigraph g = gen_series_parallel(61, 20000, shape);
  EngineOptions opt;
  opt.keep_trace = false;
  for (Flavor f : kFlavors) {
    const Verdict v = run(g, f, opt);
    EXPECT_LE(v.main_steps, v.budget);
  }
}

TEST(Engine, ConflictStopsEvenWithoutEagerChecks) {
  Multigraph g = from_edges(3, {{0, 1}, {1, 2}});
  g.add_constraint(vid(0), vid(2));
  g.add_constraint(vid(1), vid(2));
  EngineOptions lazy;
  lazy.eager_no = false;
  for (Flavor f : kFlavors) {
    const Verdict v = run(g, f, lazy);
    EXPECT_FALSE(v.yes);
    EXPECT_EQ(v.reason, Reason::ConflictingConstraints);
  }
}

// Shapes where a naive per-vertex scan goes quadratic: many chains between
// two hubs, many double-edge petals on one hub, a long cycle of double edges.
TEST(Engine, WideShapesFinish) {
  const std::size_t k = 20000;
  Multigraph theta(2);
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId m = theta.add_vertex();
    theta.add_edge(vid(0), m);
    theta.add_edge(m, vid(1));
  }
  Multigraph flower(1);
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId leaf = flower.add_vertex();
    flower.add_edge(vid(0), leaf);
    flower.add_edge(vid(0), leaf);
  }
  Multigraph necklace(k);
  for (std::size_t i = 0; i < k; ++i) {
    necklace.add_edge(vid(i), vid((i + 1) % k));
    necklace.add_edge(vid(i), vid((i + 1) % k));
  }
  for (Flavor f : kFlavors) {
    EXPECT_TRUE(run(theta, f).yes);
    EXPECT_TRUE(run(flower, f).yes);
    EXPECT_FALSE(run(necklace, f).yes);
  }
}
