#include "hyperell/treewidth.hpp"

#include <unordered_set>
#include <vector>

namespace hyperell {

bool tw_at_most_2(const Multigraph& g) {
  const std::size_t bound = g.vertex_id_bound();
  std::vector<std::unordered_set<std::uint32_t>> adj(bound);
  std::vector<char> alive(bound, 0);
  for (VertexId v : g.vertices()) {
    alive[v.index()] = 1;
    for (const Incidence& h : g.incidence(v)) {
      const VertexId w = g.neighbor(h);
      if (w != v) adj[v.index()].insert(w.value);
    }
  }

  std::vector<std::uint32_t> work;
  for (VertexId v : g.vertices()) {
    if (adj[v.index()].size() <= 2) work.push_back(v.value);
  }
  std::size_t remaining = g.num_vertices();
  while (!work.empty()) {
    const std::uint32_t v = work.back();
    work.pop_back();
    if (!alive[v] || adj[v].size() > 2) continue;
    std::vector<std::uint32_t> nb(adj[v].begin(), adj[v].end());
    for (std::uint32_t w : nb) adj[w].erase(v);
    if (nb.size() == 2) {
      adj[nb[0]].insert(nb[1]);
      adj[nb[1]].insert(nb[0]);
    }
    adj[v].clear();
    alive[v] = 0;
    --remaining;
    for (std::uint32_t w : nb) {
      if (adj[w].size() <= 2) work.push_back(w);
    }
  }
  return remaining == 0;
}

}  // namespace hyperell
