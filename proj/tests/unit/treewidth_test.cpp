#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "graphs.hpp"
#include "hyperell/testkit.hpp"
#include "hyperell/treewidth.hpp"

using namespace hyperell;
using namespace hyperell::testing;

namespace {

// Exact tw <= 2 by dynamic programming over elimination prefixes: after
// eliminating S, v's neighbors are the outside vertices reachable from v
// through S.
bool brute_tw_at_most_2(std::size_t n, const std::vector<std::uint32_t>& adj) {
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> ok(1u << n, 0);
  ok[0] = 1;
  for (std::uint32_t s = 0; s < full; ++s) {
    if (!ok[s]) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if ((s >> v) & 1u) continue;
      std::uint32_t seen = 1u << v;
      std::uint32_t frontier = 1u << v;
      std::uint32_t outside = 0;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (!((frontier >> x) & 1u)) continue;
          const std::uint32_t nb = adj[x] & ~seen;
          outside |= nb & ~s;
          next |= nb & s;
          seen |= nb;
        }
        frontier = next;
      }
      if (__builtin_popcount(outside) <= 2) ok[s | (1u << v)] = 1;
    }
  }
  return ok[full];
}

Multigraph from_mask(std::size_t n, std::uint32_t mask, std::vector<std::uint32_t>& adj) {
  Multigraph g(n);
  adj.assign(n, 0);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1u) {
        g.add_edge(vid(i), vid(j));
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
  return g;
}

}  // namespace

TEST(Treewidth, Examples) {
  EXPECT_FALSE(tw_at_most_2(complete(4)));
  EXPECT_TRUE(tw_at_most_2(path(6)));
  EXPECT_TRUE(tw_at_most_2(cycle(7)));
  EXPECT_TRUE(tw_at_most_2(figure_top()));
  EXPECT_TRUE(tw_at_most_2(figure_bottom()));
  EXPECT_FALSE(tw_at_most_2(complete_bipartite(3, 3)));
  EXPECT_TRUE(tw_at_most_2(Multigraph()));
}

TEST(Treewidth, IgnoresMultiplicityLoopsAndConstraints) {
  Multigraph g = banana(5);
  g.add_edge(vid(0), vid(0));
  EXPECT_TRUE(tw_at_most_2(g));
  Multigraph k = complete(4);
  k.delete_edge(k.edges().front());
  k.add_constraint(vid(0), vid(1));
  EXPECT_TRUE(tw_at_most_2(k));
}

TEST(Treewidth, ExhaustiveUpToSixVertices) {
  std::vector<std::uint32_t> adj;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      const Multigraph g = from_mask(n, mask, adj);
      ASSERT_EQ(tw_at_most_2(g), brute_tw_at_most_2(n, adj)) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Treewidth, RandomSevenVertexGraphs) {
  std::mt19937_64 rng(21);
  std::vector<std::uint32_t> adj;
  for (int i = 0; i < 4000; ++i) {
    const Multigraph g = from_mask(7, static_cast<std::uint32_t>(rng() & ((1u << 21) - 1)), adj);
    ASSERT_EQ(tw_at_most_2(g), brute_tw_at_most_2(7, adj));
  }
}

TEST(Treewidth, MonotoneUnderEdgeDeletion) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    Multigraph g = gen_multigraph(rng(), 3 + rng() % 8, 16, 0.1, 0.05);
    while (g.num_edges() > 0) {
      const bool before = tw_at_most_2(g);
      const auto es = g.edges();
      g.delete_edge(es[rng() % es.size()]);
      if (before) ASSERT_TRUE(tw_at_most_2(g));
    }
  }
}

TEST(Treewidth, SeriesParallelGeneratorOutput) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) EXPECT_TRUE(tw_at_most_2(gen_series_parallel(seed, 2 + seed % 40)));
}
