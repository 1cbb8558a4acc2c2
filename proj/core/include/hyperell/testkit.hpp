#ifndef HYPERELL_TESTKIT_HPP
#define HYPERELL_TESTKIT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperell/multigraph.hpp"

namespace hyperell {

/// Connected multigraph: a random spanning tree on n vertices, then m-n+1
/// extra edges. Each extra edge is a loop with probability p_loop, a copy of
/// an existing edge with probability p_parallel, otherwise a random pair.
Multigraph gen_multigraph(std::uint64_t seed, std::size_t n, std::size_t m, double p_parallel, double p_loop);

/// Relative weights of the growth moves of gen_series_parallel.
struct SeriesParallelShape {
  double series = 0.45;    // subdivide an edge
  double parallel = 0.35;  // duplicate an edge
  double leaf = 0.20;      // hang a new leaf
  /// Edge cap (at least n - 1 is always used); 0 means 2n.
  std::size_t target_edges = 0;
};

/// Grows a single edge by series, parallel and leaf moves until it has n
/// vertices. Output always has treewidth at most 2.
Multigraph gen_series_parallel(std::uint64_t seed, std::size_t n, const SeriesParallelShape& shape = {});

enum class BoundedAnswer : std::uint8_t { Yes, Unknown };

/// One-sided sdgon <= 2 check: tries every refinement that subdivides each
/// edge 0..max_subdiv times. Bounds: n <= 6, m <= 8, max_subdiv <= 2.
BoundedAnswer sdgon_leq2_bounded(const Multigraph& g, std::size_t max_subdiv = 2);

/// Seeded mix of small connected multigraphs for property tests.
std::vector<Multigraph> small_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n, std::size_t max_m);

}  // namespace hyperell

#endif  // HYPERELL_TESTKIT_HPP
