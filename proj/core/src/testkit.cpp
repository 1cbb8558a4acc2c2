#include "hyperell/testkit.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "hyperell/chipfiring.hpp"
#include "hyperell/treewidth.hpp"

namespace hyperell {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

}  // namespace

Multigraph gen_multigraph(std::uint64_t seed, std::size_t n, std::size_t m, double p_parallel, double p_loop) {
  if (n == 0) throw std::invalid_argument("gen_multigraph needs n >= 1");
  if (m + 1 < n) throw std::invalid_argument("gen_multigraph needs m >= n - 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Multigraph g(n);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 1; i < n; ++i) {
    const VertexId u(static_cast<std::uint32_t>(i));
    const VertexId w(static_cast<std::uint32_t>(pick(rng, i)));
    g.add_edge(u, w);
    pairs.emplace_back(u, w);
  }
  for (std::size_t k = n - 1; k < m; ++k) {
    const double r = coin(rng);
    if (r < p_loop || n == 1) {
      const VertexId v(static_cast<std::uint32_t>(pick(rng, n)));
      g.add_edge(v, v);
    } else if (r < p_loop + p_parallel && !pairs.empty()) {
      const auto [a, b] = pairs[pick(rng, pairs.size())];
      g.add_edge(a, b);
    } else {
      const std::size_t a = pick(rng, n);
      std::size_t b = pick(rng, n - 1);
      if (b >= a) ++b;
      const VertexId u(static_cast<std::uint32_t>(a));
      const VertexId w(static_cast<std::uint32_t>(b));
      g.add_edge(u, w);
      pairs.emplace_back(u, w);
    }
  }
  return g;
}

Multigraph gen_series_parallel(std::uint64_t seed, std::size_t n, const SeriesParallelShape& shape) {
  if (n < 2) throw std::invalid_argument("gen_series_parallel needs n >= 2");
  std::mt19937_64 rng(seed);
  const double total = shape.series + shape.parallel + shape.leaf;
  if (!(total > 0.0)) throw std::invalid_argument("series-parallel weights must be positive");
  if (n > 2 && !(shape.series + shape.leaf > 0.0)) {
    throw std::invalid_argument("series-parallel shape cannot add vertices");
  }
  std::uniform_real_distribution<double> coin(0.0, total);
  const std::size_t cap = shape.target_edges != 0 ? shape.target_edges : 2 * n;

  Multigraph g(2);
  std::vector<EdgeId> live{g.add_edge(VertexId(0), VertexId(1))};
  auto take_edge = [&](std::size_t i) {
    const EdgeId e = live[i];
    live[i] = live.back();
    live.pop_back();
    return e;
  };
  while (g.num_vertices() < n) {
    const double r = coin(rng);
    if (r < shape.series) {
      const EdgeId e = take_edge(pick(rng, live.size()));
      g.subdivide_edge(e, 1);
      live.emplace_back(static_cast<std::uint32_t>(g.edge_id_bound() - 2));
      live.emplace_back(static_cast<std::uint32_t>(g.edge_id_bound() - 1));
    } else if (r < shape.series + shape.parallel) {
      // Each missing vertex still costs one edge.
      if (g.num_edges() + (n - g.num_vertices()) >= cap) continue;
      const auto [a, b] = g.endpoints(live[pick(rng, live.size())]);
      live.push_back(g.add_edge(a, b));
    } else {
      const VertexId v(static_cast<std::uint32_t>(pick(rng, g.vertex_id_bound())));
      const VertexId w = g.add_vertex();
      live.push_back(g.add_edge(v, w));
    }
  }
  return g;
}

BoundedAnswer sdgon_leq2_bounded(const Multigraph& g, std::size_t max_subdiv) {
  if (g.num_vertices() > 6 || g.num_edges() > 8 || max_subdiv > 2) {
    throw std::invalid_argument("sdgon_leq2_bounded: bounds are n <= 6, m <= 8, max_subdiv <= 2");
  }
  // A yes-instance needs treewidth <= 2; skipping the rest keeps the answer one-sided.
  if (!tw_at_most_2(g)) return BoundedAnswer::Unknown;

  // Parallel copies are interchangeable, so only non-decreasing counts within
  // each class of parallel edges are tried.
  const std::vector<EdgeId> es = g.edges();
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < es.size(); ++i) classes[g.endpoints(es[i])].push_back(i);
  std::vector<std::size_t> prev_in_class(es.size(), SIZE_MAX);
  for (const auto& [key, members] : classes) {
    for (std::size_t j = 1; j < members.size(); ++j) prev_in_class[members[j]] = members[j - 1];
  }

  std::vector<std::size_t> counts(es.size(), 0);
  for (;;) {
    bool canonical = true;
    for (std::size_t i = 0; i < es.size() && canonical; ++i) {
      if (prev_in_class[i] != SIZE_MAX && counts[prev_in_class[i]] > counts[i]) canonical = false;
    }
    if (canonical) {
      Multigraph h = g;
      for (std::size_t i = 0; i < es.size(); ++i) {
        if (counts[i] > 0) h.subdivide_edge(es[i], counts[i]);
      }
      if (dgon_at_most_2(h)) return BoundedAnswer::Yes;
    }
    std::size_t i = 0;
    while (i < counts.size() && counts[i] == max_subdiv) counts[i++] = 0;
    if (i == counts.size()) break;
    ++counts[i];
  }
  return BoundedAnswer::Unknown;
}

std::vector<Multigraph> small_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n, std::size_t max_m) {
  std::mt19937_64 rng(seed);
  std::vector<Multigraph> out;
  out.reserve(count);
  static constexpr double kParallel[] = {0.0, 0.15, 0.35, 0.6};
  static constexpr double kLoop[] = {0.0, 0.0, 0.1, 0.25};
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + pick(rng, max_n);
    const std::size_t lo = n - 1;
    const std::size_t hi = std::max(lo, max_m);
    const std::size_t m = lo + pick(rng, hi - lo + 1);
    const std::uint64_t sub = rng();
    if (i % 5 == 4 && n >= 2) {
      SeriesParallelShape shape;
      shape.target_edges = std::max<std::size_t>(n - 1, max_m);
      out.push_back(gen_series_parallel(sub, n, shape));
    } else {
      out.push_back(gen_multigraph(sub, n, m, kParallel[pick(rng, 4)], kLoop[pick(rng, 4)]));
    }
  }
  return out;
}

}  // namespace hyperell
