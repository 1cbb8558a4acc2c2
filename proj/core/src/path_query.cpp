#include "hyperell/path_query.hpp"

#include <algorithm>
#include <random>

namespace hyperell {

void CutLabels::compute(const Multigraph& g) {
  const std::size_t nb = g.vertex_id_bound();
  label_.assign(g.edge_id_bound(), 0);
  std::vector<std::uint64_t> acc(nb, 0);
  std::vector<EdgeId> parent_edge(nb);
  std::vector<char> seen(nb, 0);
  std::vector<char> tree(g.edge_id_bound(), 0);
  std::vector<VertexId> order;
  std::vector<VertexId> stack;
  order.reserve(g.num_vertices());

  // Any spanning forest works; children are discovered after their parent.
  for (VertexId root : g.vertices()) {
    if (seen[root.index()]) continue;
    seen[root.index()] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (const Incidence& h : g.incidence(x)) {
        const VertexId y = g.neighbor(h);
        if (seen[y.index()]) continue;
        seen[y.index()] = 1;
        parent_edge[y.index()] = h.edge;
        tree[h.edge.index()] = 1;
        stack.push_back(y);
      }
    }
  }

  std::mt19937_64 rng(seed_++);
  for (EdgeId e : g.edges()) {
    if (tree[e.index()]) continue;
    std::uint64_t r = 0;
    while (r == 0) r = rng();
    label_[e.index()] = r;
    const auto [a, b] = g.endpoints(e);
    acc[a.index()] ^= r;
    acc[b.index()] ^= r;
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const EdgeId pe = parent_edge[it->index()];
    if (!pe.valid()) continue;
    label_[pe.index()] = acc[it->index()];
    acc[g.opposite(pe, *it).index()] ^= acc[it->index()];
  }
  version_ = g.version();
  work_ = 0;
  owner_ = &g;
}

void PathQuery::grow(const Multigraph& g) {
  if (vmark_.size() < g.vertex_id_bound()) vmark_.resize(g.vertex_id_bound(), 0);
  if (emark_.size() < g.edge_id_bound()) emark_.resize(g.edge_id_bound(), 0);
}

std::uint32_t PathQuery::next_epoch() {
  if (epoch_ >= 0x7ffffffeu) {
    std::fill(vmark_.begin(), vmark_.end(), 0);
    std::fill(emark_.begin(), emark_.end(), 0);
    epoch_ = 0;
  }
  return ++epoch_;
}

bool PathQuery::connected(const Multigraph& g, VertexId u, VertexId v, std::span<const EdgeId> excluded,
                          bool through_constraints) {
  g.degree(u);
  g.degree(v);
  last_visited_ = 0;
  if (u == v) return true;
  grow(g);
  const std::uint32_t ep = next_epoch();
  const std::uint32_t tag[2] = {ep * 2, ep * 2 + 1};
  for (EdgeId e : excluded) emark_[e.index()] = ep;

  for (auto& q : queue_) q.clear();
  queue_[0].push_back(u);
  queue_[1].push_back(v);
  vmark_[u.index()] = tag[0];
  vmark_[v.index()] = tag[1];
  std::size_t head[2] = {0, 0};

  auto reach = [&](int side, VertexId y) -> bool {
    const std::uint32_t m = vmark_[y.index()];
    if (m == tag[1 - side]) return true;
    if (m != tag[side]) {
      vmark_[y.index()] = tag[side];
      queue_[side].push_back(y);
    }
    return false;
  };

  while (head[0] < queue_[0].size() && head[1] < queue_[1].size()) {
    for (int side = 0; side < 2; ++side) {
      const VertexId x = queue_[side][head[side]++];
      ++last_visited_;
      for (const Incidence& h : g.incidence(x)) {
        if (emark_[h.edge.index()] == ep) continue;
        if (reach(side, g.neighbor(h))) return true;
      }
      if (through_constraints && g.constraint_count(x) != 0) {
        for (VertexId y : g.constraint_partners(x)) {
          if (reach(side, y)) return true;
        }
      }
      if (head[side] >= queue_[side].size()) return false;
    }
  }
  return false;
}

}  // namespace hyperell
