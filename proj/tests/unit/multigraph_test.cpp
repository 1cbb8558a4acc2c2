#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "graphs.hpp"
#include "hyperell/multigraph.hpp"
#include "hyperell/testkit.hpp"

using namespace hyperell;
using namespace hyperell::testing;

TEST(Multigraph, LoopCountsTwice) {
  Multigraph g(1);
  g.add_edge(vid(0), vid(0));
  EXPECT_EQ(g.degree(vid(0)), 2u);
  EXPECT_EQ(g.loop_count(vid(0)), 1u);
}

TEST(Multigraph, DeleteOneParallelEdge) {
  Multigraph g(2);
  const EdgeId a = g.add_edge(vid(0), vid(1));
  const EdgeId b = g.add_edge(vid(0), vid(1));
  g.delete_edge(a);
  EXPECT_FALSE(g.is_live(a));
  EXPECT_TRUE(g.is_live(b));
  EXPECT_EQ(g.parallel_count(vid(0), vid(1)), 1u);
}

TEST(Multigraph, DeleteConstrainedVertexThrows) {
  Multigraph g(2);
  g.add_constraint(vid(0), vid(1));
  EXPECT_THROW(g.delete_vertex(vid(0)), GraphError);
  g.remove_constraint(vid(0), vid(1));
  g.delete_vertex(vid(0));
  EXPECT_EQ(g.num_vertices(), 1u);
}

TEST(Multigraph, ContractPathEdge) {
  Multigraph g = path(3);
  const VertexId s = g.contract_edge(g.edges_between(vid(0), vid(1)).front());
  EXPECT_EQ(s, vid(0));
  EXPECT_EQ(g.num_vertices(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.parallel_count(vid(0), vid(2)), 1u);
}

TEST(Multigraph, ContractParallelLeavesLoop) {
  Multigraph g = banana(2);
  g.contract_edge(g.edges().front());
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.loop_count(vid(0)), 1u);
}

TEST(Multigraph, ContractRewritesConstraints) {
  Multigraph g = path(3);
  g.add_constraint(vid(1), vid(2));
  g.contract_edge(g.edges_between(vid(0), vid(1)).front());
  EXPECT_TRUE(g.has_constraint(vid(0), vid(2)));
  EXPECT_EQ(g.num_constraints(), 1u);
}

TEST(Multigraph, ContractMergesDuplicateConstraints) {
  Multigraph g = path(3);
  g.add_constraint(vid(0), vid(2));
  g.add_constraint(vid(1), vid(2));
  g.contract_edge(g.edges_between(vid(0), vid(1)).front());
  EXPECT_EQ(g.num_constraints(), 1u);
  EXPECT_EQ(g.constraint_count(vid(0)), 1u);
}

TEST(Multigraph, SubdivideEdge) {
  Multigraph g = path(2);
  const auto fresh = g.subdivide_edge(g.edges().front(), 1);
  ASSERT_EQ(fresh.size(), 1u);
  EXPECT_EQ(g.degree(fresh[0]), 2u);
  EXPECT_EQ(g.num_edges(), 2u);

  Multigraph h = path(2);
  EXPECT_EQ(h.subdivide_edge(h.edges().front(), 3).size(), 3u);
  EXPECT_EQ(h.num_edges(), 4u);
  EXPECT_THROW(h.subdivide_edge(h.edges().front(), 0), GraphError);
}

TEST(Multigraph, SubdivideLoopMakesDoubleEdge) {
  Multigraph g(1);
  g.add_edge(vid(0), vid(0));
  const auto fresh = g.subdivide_edge(g.edges().front(), 1);
  EXPECT_EQ(g.parallel_count(vid(0), fresh[0]), 2u);
  EXPECT_EQ(g.loop_count(vid(0)), 0u);
}

TEST(Multigraph, DegreeIgnoresConstraints) {
  Multigraph g(1);
  g.add_constraint(vid(0), vid(0));
  EXPECT_EQ(g.degree(vid(0)), 0u);
  Multigraph h(2);
  h.add_edge(vid(0), vid(0));
  h.add_edge(vid(0), vid(1));
  EXPECT_EQ(h.degree(vid(0)), 3u);
  EXPECT_EQ(h.degree(vid(1)), 1u);
}

TEST(Multigraph, Betti) {
  EXPECT_EQ(cycle(3).betti(), 1u);
  EXPECT_EQ(path(5).betti(), 0u);
  EXPECT_EQ(banana(3).betti(), 2u);
  EXPECT_EQ(banana(3).parallel_count(vid(0), vid(1)), 3u);
  EXPECT_TRUE(path(5).is_tree());
  EXPECT_FALSE(cycle(3).is_tree());
}

TEST(Multigraph, ConstraintPairsStoredOnce) {
  Multigraph g(2);
  EXPECT_TRUE(g.add_constraint(vid(0), vid(1)));
  EXPECT_FALSE(g.add_constraint(vid(1), vid(0)));
  EXPECT_TRUE(g.add_constraint(vid(1), vid(1)));
  EXPECT_EQ(g.num_constraints(), 2u);
  EXPECT_EQ(g.constraint_partners(vid(1)), (std::vector<VertexId>{vid(0), vid(1)}));
  EXPECT_EQ(g.constraint_count(vid(0)), 1u);
}

TEST(Multigraph, SideSubgraph) {
  using Set = std::vector<VertexId>;
  auto sorted = [](Set s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  EXPECT_EQ(sorted(path(3).side_subgraph(vid(1), vid(0))), (Set{vid(0), vid(1)}));
  EXPECT_EQ(sorted(cycle(3).side_subgraph(vid(0), vid(1))).size(), 3u);
  const Multigraph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(sorted(star.side_subgraph(vid(0), vid(2))), (Set{vid(0), vid(2)}));
}

TEST(Multigraph, ChainCyclesOfCycle) {
  const auto cs = cycle(5).chain_cycles();
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_TRUE(cs[0].branch.empty());
  EXPECT_EQ(cs[0].vertices.size(), 5u);
}

TEST(Multigraph, ChainCyclesPendantTriangle) {
  const Multigraph g = from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}});
  const auto cs = g.chain_cycles();
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].branch, std::vector<VertexId>{vid(0)});
}

TEST(Multigraph, ChainCyclesTheta) {
  const Multigraph g = from_edges(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
  const auto cs = g.chain_cycles();
  ASSERT_EQ(cs.size(), 3u);
  for (const auto& c : cs) EXPECT_EQ(c.branch.size(), 2u);
}

TEST(Multigraph, ConnectedWithConstraints) {
  Multigraph g = banana(2);
  const auto es = g.edges();
  EXPECT_FALSE(g.connected_with_constraints(vid(0), vid(1), es));
  g.add_constraint(vid(0), vid(1));
  EXPECT_TRUE(g.connected_with_constraints(vid(0), vid(1), es));

  const Multigraph sq = cycle(4);
  const EdgeId one[] = {sq.edges_between(vid(0), vid(1)).front()};
  EXPECT_TRUE(sq.connected_with_constraints(vid(0), vid(1), one));
}

TEST(Multigraph, VersionAndTouchTracking) {
  Multigraph g = path(3);
  const auto v0 = g.version();
  g.set_touch_tracking(true);
  g.add_constraint(vid(0), vid(2));
  EXPECT_GT(g.version(), v0);
  auto t = g.take_touched();
  std::sort(t.begin(), t.end());
  EXPECT_EQ(t, (std::vector<VertexId>{vid(0), vid(2)}));
  EXPECT_TRUE(g.take_touched().empty());
}

TEST(Multigraph, IdsNeverReused) {
  Multigraph g = path(2);
  g.delete_edge(g.edges().front());
  g.delete_vertex(vid(1));
  EXPECT_EQ(g.add_vertex(), vid(2));
  EXPECT_EQ(g.add_edge(vid(0), vid(2)), EdgeId(1));
}

TEST(Multigraph, RandomMutationInvariants) {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 200; ++round) {
    Multigraph g = gen_multigraph(rng(), 2 + rng() % 8, 12, 0.3, 0.15);
    for (int k = 0; k < 8 && g.num_edges() > 0; ++k) {
      const auto es = g.edges();
      const EdgeId e = es[rng() % es.size()];
      const std::size_t betti = g.betti();
      const std::size_t comps = g.components().size();
      switch (rng() % 4) {
        case 0:
          if (!g.is_loop(e)) {
            g.contract_edge(e);
            EXPECT_EQ(g.betti(), betti);
          }
          break;
        case 1:
          g.subdivide_edge(e, 1 + rng() % 2);
          EXPECT_EQ(g.betti(), betti);
          EXPECT_EQ(g.components().size(), comps);
          break;
        case 2: {
          const auto vs = g.vertices();
          g.add_constraint(vs[rng() % vs.size()], vs[rng() % vs.size()]);
          break;
        }
        default: g.delete_edge(e);
      }
      std::size_t deg = 0;
      for (VertexId v : g.vertices()) deg += g.degree(v);
      EXPECT_EQ(deg, 2 * g.num_edges());

      for (VertexId v : g.vertices()) {
        std::map<VertexId, std::size_t> mult;
        std::size_t loop_halves = 0;
        for (const Incidence& h : g.incidence(v)) {
          if (g.is_loop(h.edge)) {
            ++loop_halves;
          } else {
            ++mult[g.neighbor(h)];
          }
        }
        EXPECT_EQ(g.loop_count(v), loop_halves / 2);
        bool multi = false;
        for (const auto& [w, k] : mult) {
          EXPECT_EQ(g.parallel_count(v, w), k);
          EXPECT_EQ(g.edges_between(v, w).size(), k);
          multi = multi || k >= 2;
        }
        EXPECT_EQ(g.has_parallel(v), multi);
      }

      const auto cons = g.constraints();
      EXPECT_EQ(std::set<VertexPair>(cons.begin(), cons.end()).size(), cons.size());
      EXPECT_EQ(cons.size(), g.num_constraints());

      for (const auto& c : g.chain_cycles()) {
        ASSERT_EQ(c.vertices.size(), c.edges.size());
        for (VertexId v : c.vertices) {
          if (std::find(c.branch.begin(), c.branch.end(), v) == c.branch.end()) EXPECT_EQ(g.degree(v), 2u);
        }
      }
    }
  }
}

TEST(Multigraph, CopiesCompareEqual) {
  Multigraph g = figure_top();
  Multigraph h = g;
  EXPECT_TRUE(g == h);
  h.add_constraint(vid(0), vid(0));
  EXPECT_FALSE(g == h);
}
