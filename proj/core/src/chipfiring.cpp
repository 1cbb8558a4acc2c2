#include "hyperell/chipfiring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace hyperell {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ChipError("chip count overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ChipError("chip count overflow");
  return r;
}

void require_size(const ChipGraph& g, std::size_t n) {
  if (n != g.size()) {
    throw ChipError("size mismatch: expected " + std::to_string(g.size()) + ", got " + std::to_string(n));
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::int64_t divisor_degree(const Divisor& d) { return std::accumulate(d.begin(), d.end(), std::int64_t{0}); }

bool is_effective(const Divisor& d) {
  return std::all_of(d.begin(), d.end(), [](std::int64_t c) { return c >= 0; });
}

ChipGraph::ChipGraph(const Multigraph& g) : ids_(g.vertices()) {
  pos_.assign(g.vertex_id_bound(), SIZE_MAX);
  for (std::size_t i = 0; i < ids_.size(); ++i) pos_[ids_[i].index()] = i;
  adj_.resize(ids_.size());
  deg_.assign(ids_.size(), 0);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (const auto& [w, mult] : g.neighbor_multiplicities(ids_[i])) {
      adj_[i].emplace_back(pos_[w.index()], static_cast<std::int64_t>(mult));
      deg_[i] += static_cast<std::int64_t>(mult);
    }
    std::sort(adj_[i].begin(), adj_[i].end());
  }
  if (!ids_.empty()) {
    std::vector<char> seen(ids_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& [y, mult] : adj_[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    connected_ = reached == ids_.size();
  }
}

std::size_t ChipGraph::index_of(VertexId v) const {
  if (!v.valid() || v.index() >= pos_.size() || pos_[v.index()] == SIZE_MAX) {
    throw ChipError("vertex " + std::to_string(v.value) + " not in chip graph");
  }
  return pos_[v.index()];
}

std::int64_t ChipGraph::multiplicity(std::size_t i, std::size_t j) const {
  auto it = std::lower_bound(adj_[i].begin(), adj_[i].end(), std::make_pair(j, std::int64_t{0}));
  return (it != adj_[i].end() && it->first == j) ? it->second : 0;
}

Divisor ChipGraph::unit(std::size_t i, std::int64_t chips) const {
  Divisor d(size(), 0);
  d.at(i) = chips;
  return d;
}

Divisor apply_laplacian(const ChipGraph& g, const FiringVector& f) {
  require_size(g, f.size());
  Divisor out(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::int64_t v = checked_mul(g.degree(i), f[i]);
    for (const auto& [j, mult] : g.neighbors(i)) v = checked_add(v, -checked_mul(mult, f[j]));
    out[i] = v;
  }
  return out;
}

Divisor fire_set(const ChipGraph& g, const Divisor& d, std::span<const std::size_t> a) {
  require_size(g, d.size());
  if (a.empty()) throw ChipError("empty firing set");
  std::vector<char> in(g.size(), 0);
  for (std::size_t x : a) in.at(x) = 1;
  Divisor out = d;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!in[x]) continue;
    for (const auto& [y, mult] : g.neighbors(x)) {
      if (in[y]) continue;
      out[x] -= mult;
      out[y] += mult;
    }
  }
  return out;
}

bool is_valid_firing(const ChipGraph& g, const Divisor& d, std::span<const std::size_t> a) {
  require_size(g, d.size());
  if (a.empty()) throw ChipError("empty firing set");
  std::vector<char> in(g.size(), 0);
  for (std::size_t x : a) in.at(x) = 1;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!in[x]) continue;
    std::int64_t out = 0;
    for (const auto& [y, mult] : g.neighbors(x)) {
      if (!in[y]) out += mult;
    }
    if (d[x] < out) return false;
  }
  return true;
}

LevelSets level_sets(const FiringVector& f) {
  LevelSets out;
  if (f.empty()) return out;
  const std::int64_t hi = *std::max_element(f.begin(), f.end());
  const std::int64_t lo = *std::min_element(f.begin(), f.end());
  for (std::int64_t i = 0; i <= hi - lo; ++i) {
    std::vector<std::size_t> level;
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (f[v] >= hi - i) level.push_back(v);
    }
    out.push_back(std::move(level));
  }
  return out;
}

std::vector<Divisor> replay(const ChipGraph& g, const Divisor& d, const LevelSets& ls) {
  require_size(g, d.size());
  std::vector<Divisor> out{d};
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) out.push_back(fire_set(g, out.back(), ls[i]));
  return out;
}

Divisor reduce_divisor(const ChipGraph& g, const Divisor& d, std::size_t q) {
  require_size(g, d.size());
  if (q >= g.size()) throw ChipError("base vertex out of range");
  if (!g.connected()) throw ChipError("reduce_divisor needs a connected graph");
  const std::size_t n = g.size();
  Divisor cur = d;

  // Clear debt off q: for each distance level from the outside in, fire the
  // ball one level closer to q until the level is solvent.
  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::vector<std::size_t> order{q};
  dist[q] = 0;
  for (std::size_t h = 0; h < order.size(); ++h) {
    const std::size_t x = order[h];
    for (const auto& [y, mult] : g.neighbors(x)) {
      if (dist[y] == SIZE_MAX) {
        dist[y] = dist[x] + 1;
        order.push_back(y);
      }
    }
  }
  const std::size_t max_dist = dist[order.back()];
  for (std::size_t level = max_dist; level >= 1; --level) {
    std::int64_t debt = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (dist[x] == level) debt = std::max(debt, -cur[x]);
    }
    if (debt == 0) continue;
    for (std::size_t x = 0; x < n; ++x) {
      if (dist[x] >= level) continue;
      for (const auto& [y, mult] : g.neighbors(x)) {
        if (dist[y] < level) continue;
        const std::int64_t moved = checked_mul(debt, mult);
        cur[x] = checked_add(cur[x], -moved);
        cur[y] = checked_add(cur[y], moved);
      }
    }
  }

  // Burning: fire the unburnt set as often as it stays valid.
  std::vector<std::int64_t> heat(n);
  std::vector<char> burnt(n);
  std::vector<std::size_t> queue;
  for (;;) {
    std::fill(heat.begin(), heat.end(), 0);
    std::fill(burnt.begin(), burnt.end(), 0);
    queue.assign(1, q);
    burnt[q] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::size_t x = queue[h];
      for (const auto& [y, mult] : g.neighbors(x)) {
        if (burnt[y]) continue;
        heat[y] += mult;
        if (heat[y] > cur[y]) {
          burnt[y] = 1;
          queue.push_back(y);
        }
      }
    }
    if (queue.size() == n) break;
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (std::size_t x = 0; x < n; ++x) {
      if (!burnt[x] && heat[x] > 0) times = std::min(times, cur[x] / heat[x]);
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (burnt[x]) continue;
      for (const auto& [y, mult] : g.neighbors(x)) {
        if (!burnt[y]) continue;
        const std::int64_t moved = checked_mul(times, mult);
        cur[x] -= moved;
        cur[y] += moved;
      }
    }
  }
  return cur;
}

bool equivalent(const ChipGraph& g, const Divisor& d, const Divisor& e) {
  require_size(g, d.size());
  require_size(g, e.size());
  if (divisor_degree(d) != divisor_degree(e)) throw ChipError("degree mismatch");
  if (g.size() == 0) return true;
  return reduce_divisor(g, d, 0) == reduce_divisor(g, e, 0);
}

bool effective_equivalent(const ChipGraph& g, const Divisor& d) {
  require_size(g, d.size());
  if (g.size() == 0) return true;
  return reduce_divisor(g, d, 0)[0] >= 0;
}

bool rank_at_least_one(const ChipGraph& g, const Divisor& d) {
  require_size(g, d.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    // v-reduced form is effective off v, so only v's count matters.
    if (reduce_divisor(g, d, v)[v] < 1) return false;
  }
  return true;
}

bool dgon_at_most_2(const Multigraph& g) {
  const ChipGraph cg(g);
  const std::size_t n = cg.size();
  if (n == 0) return true;
  std::int64_t edges2 = 0;
  for (std::size_t i = 0; i < n; ++i) edges2 += cg.degree(i);
  if (!cg.connected()) {
    std::vector<std::size_t> comp(n, SIZE_MAX);
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (comp[s] != SIZE_MAX) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = count;
      while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (const auto& [y, mult] : cg.neighbors(x)) {
          if (comp[y] == SIZE_MAX) {
            comp[y] = count;
            stack.push_back(y);
          }
        }
      }
      ++count;
    }
    // A forest has exactly n - (#components) edges.
    return count == 2 && edges2 / 2 == static_cast<std::int64_t>(n) - 2;
  }
  if (edges2 / 2 == static_cast<std::int64_t>(n) - 1) return true;
  // Any rank-1 class contains a divisor with a chip on vertex 0.
  for (std::size_t w = 0; w < n; ++w) {
    Divisor d = cg.unit(0);
    d[w] += 1;
    if (rank_at_least_one(cg, d)) return true;
  }
  return false;
}

bool constrained_suitable_exists(const Multigraph& g, std::size_t max_vertices) {
  const ChipGraph cg(g);
  const std::size_t n = cg.size();
  if (n > max_vertices || n > 20) {
    throw ChipError("constrained oracle bound exceeded: n=" + std::to_string(n));
  }
  if (n == 0) return true;
  if (!cg.connected()) throw ChipError("constrained oracle needs a connected graph");

  std::vector<std::pair<std::size_t, std::size_t>> cons;
  for (const VertexPair& p : g.constraints()) cons.emplace_back(cg.index_of(p.first), cg.index_of(p.second));
  std::vector<int> per_vertex(n, 0);
  for (const auto& [a, b] : cons) {
    ++per_vertex[a];
    if (b != a) ++per_vertex[b];
  }
  if (std::any_of(per_vertex.begin(), per_vertex.end(), [](int c) { return c > 1; })) return false;

  // Firing moves between degree-2 effective divisors have cut size <= 2,
  // so each keeps at most two (vertex, amount) losses and gains.
  struct Move {
    std::vector<std::pair<std::size_t, std::int64_t>> loss;
    std::vector<std::pair<std::size_t, std::int64_t>> gain;
  };
  std::vector<Move> moves;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    bool closed = true;
    for (const auto& [a, b] : cons) {
      if (((mask >> a) & 1u) != ((mask >> b) & 1u)) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    Move mv;
    std::int64_t cut = 0;
    std::vector<std::int64_t> gain(n, 0);
    for (std::size_t x = 0; x < n && cut <= 2; ++x) {
      if (!((mask >> x) & 1u)) continue;
      std::int64_t out = 0;
      for (const auto& [y, mult] : cg.neighbors(x)) {
        if ((mask >> y) & 1u) continue;
        out += mult;
        gain[y] += mult;
      }
      if (out > 0) mv.loss.emplace_back(x, out);
      cut += out;
    }
    if (cut > 2) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (gain[y] > 0) mv.gain.emplace_back(y, gain[y]);
    }
    moves.push_back(std::move(mv));
  }

  auto state_of = [n](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return a * n + b;
  };
  UnionFind uf(n * n);
  std::vector<std::int64_t> chips(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      chips[a] += 1;
      chips[b] += 1;
      for (const Move& mv : moves) {
        bool ok = true;
        for (const auto& [x, out] : mv.loss) ok = ok && chips[x] >= out;
        if (!ok) continue;
        std::vector<std::size_t> after;
        for (std::size_t x = 0; x < n; ++x) {
          std::int64_t c = chips[x];
          for (const auto& [y, out] : mv.loss) {
            if (y == x) c -= out;
          }
          for (const auto& [y, in] : mv.gain) {
            if (y == x) c += in;
          }
          for (std::int64_t k = 0; k < c; ++k) after.push_back(x);
        }
        uf.unite(state_of(a, b), state_of(after[0], after[1]));
      }
      chips[a] -= 1;
      chips[b] -= 1;
    }
  }

  std::vector<std::uint32_t> covered(n * n, 0);
  std::vector<std::uint32_t> satisfied(n * n, 0);  // bit i: constraint i met
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const std::size_t root = uf.find(state_of(a, b));
      covered[root] |= (1u << a) | (1u << b);
      for (std::size_t i = 0; i < cons.size(); ++i) {
        if (cons[i] == std::make_pair(a, b) || cons[i] == std::make_pair(b, a)) satisfied[root] |= 1u << i;
      }
    }
  }
  const std::uint32_t all_cons = cons.empty() ? 0 : static_cast<std::uint32_t>((1ull << cons.size()) - 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const std::size_t s = state_of(a, b);
      if (uf.find(s) == s && covered[s] == full && satisfied[s] == all_cons) return true;
    }
  }
  return false;
}

bool cycle_pair_equivalent(std::size_t length, std::pair<std::size_t, std::size_t> p,
                           std::pair<std::size_t, std::size_t> q) {
  if (length == 0) throw ChipError("cycle length must be positive");
  if (p.first >= length || p.second >= length || q.first >= length || q.second >= length) {
    throw ChipError("cycle position out of range");
  }
  return (p.first + p.second) % length == (q.first + q.second) % length;
}

}  // namespace hyperell
