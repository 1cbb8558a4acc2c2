#include "hyperell/multigraph.hpp"

#include <algorithm>
#include <numeric>

#include "hyperell/path_query.hpp"

namespace hyperell {

namespace {

std::string dead_vertex(VertexId v) { return "dead or unknown vertex " + std::to_string(v.value); }
std::string dead_edge(EdgeId e) { return "dead or unknown edge e" + std::to_string(e.value); }

}  // namespace

Multigraph::Multigraph(std::size_t n) {
  slots_.reserve(n);
  slot_of_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) add_vertex();
}

std::uint32_t Multigraph::slot(VertexId v) const {
  if (!v.valid() || v.index() >= slot_of_.size() || slot_of_[v.index()] == kNone) throw GraphError(dead_vertex(v));
  return slot_of_[v.index()];
}

const Multigraph::EdgeRec& Multigraph::edge_rec(EdgeId e) const {
  if (!e.valid() || e.index() >= edges_.size() || !edges_[e.index()].alive) throw GraphError(dead_edge(e));
  return edges_[e.index()];
}

void Multigraph::touch_slot(std::uint32_t s) {
  ++version_;
  if (track_touched_) touched_.push_back(VertexId(slots_[s].id));
}

VertexId Multigraph::add_vertex() {
  const auto id = static_cast<std::uint32_t>(slot_of_.size());
  const auto s = static_cast<std::uint32_t>(slots_.size());
  Slot fresh;
  fresh.id = id;
  fresh.alive = true;
  slots_.push_back(std::move(fresh));
  slot_of_.push_back(s);
  ++live_vertices_;
  touch_slot(s);
  return VertexId(id);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  const std::uint32_t a = slot(u);
  const std::uint32_t b = slot(v);
  const auto e = static_cast<std::uint32_t>(edges_.size());
  EdgeRec rec;
  rec.end[0] = a;
  rec.end[1] = b;
  rec.alive = true;
  rec.pos[0] = static_cast<std::uint32_t>(slots_[a].inc.size());
  slots_[a].inc.push_back({EdgeId(e), 0});
  rec.pos[1] = static_cast<std::uint32_t>(slots_[b].inc.size());
  slots_[b].inc.push_back({EdgeId(e), 1});
  edges_.push_back(rec);
  link_pair(e);
  ++live_edges_;
  touch_slot(a);
  if (b != a) touch_slot(b);
  return EdgeId(e);
}

std::uint64_t Multigraph::pair_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

void Multigraph::link_pair(std::uint32_t e) {
  const std::uint32_t a = edges_[e].end[0];
  const std::uint32_t b = edges_[e].end[1];
  if (a == b) {
    ++slots_[a].loops;
    return;
  }
  auto& list = pair_edges_[pair_key(a, b)];
  edges_[e].pair_pos = static_cast<std::uint32_t>(list.size());
  list.push_back(e);
  if (list.size() == 2) {
    ++slots_[a].multi;
    ++slots_[b].multi;
  }
}

void Multigraph::unlink_pair(std::uint32_t e) {
  const std::uint32_t a = edges_[e].end[0];
  const std::uint32_t b = edges_[e].end[1];
  if (a == b) {
    --slots_[a].loops;
    return;
  }
  const auto it = pair_edges_.find(pair_key(a, b));
  auto& list = it->second;
  const std::uint32_t last = list.back();
  list[edges_[e].pair_pos] = last;
  edges_[last].pair_pos = edges_[e].pair_pos;
  list.pop_back();
  if (list.size() == 1) {
    --slots_[a].multi;
    --slots_[b].multi;
  } else if (list.empty()) {
    pair_edges_.erase(it);
  }
}

void Multigraph::unlink_edge(std::uint32_t e) {
  unlink_pair(e);
  for (int side = 0; side < 2; ++side) {
    EdgeRec& rec = edges_[e];
    Slot& s = slots_[rec.end[side]];
    const std::uint32_t p = rec.pos[side];
    const Incidence last = s.inc.back();
    s.inc[p] = last;
    edges_[last.edge.index()].pos[last.side] = p;
    s.inc.pop_back();
  }
  edges_[e].alive = false;
  --live_edges_;
}

void Multigraph::delete_edge(EdgeId e) {
  const EdgeRec& rec = edge_rec(e);
  const std::uint32_t a = rec.end[0];
  const std::uint32_t b = rec.end[1];
  unlink_edge(static_cast<std::uint32_t>(e.index()));
  touch_slot(a);
  if (b != a) touch_slot(b);
}

void Multigraph::delete_vertex(VertexId v) {
  const std::uint32_t s = slot(v);
  if (!slots_[s].cons.empty()) {
    throw GraphError("vertex " + std::to_string(v.value) + " still has constraints");
  }
  while (!slots_[s].inc.empty()) {
    const Incidence h = slots_[s].inc.back();
    const std::uint32_t other = edges_[h.edge.index()].end[1 - h.side];
    unlink_edge(static_cast<std::uint32_t>(h.edge.index()));
    if (other != s) touch_slot(other);
  }
  ++version_;
  slots_[s].alive = false;
  slots_[s].inc.shrink_to_fit();
  slot_of_[v.index()] = kNone;
  --live_vertices_;
}

VertexId Multigraph::contract_edge(EdgeId e) {
  const EdgeRec& rec = edge_rec(e);
  const std::uint32_t a = rec.end[0];
  const std::uint32_t b = rec.end[1];
  if (a == b) throw GraphError("cannot contract loop " + std::to_string(e.value));

  const std::uint32_t survivor_id = std::min(slots_[a].id, slots_[b].id);
  const std::uint32_t dead_id = std::max(slots_[a].id, slots_[b].id);
  unlink_edge(static_cast<std::uint32_t>(e.index()));

  // Keep the slot with more bookkeeping; move the other one into it.
  auto weight = [&](std::uint32_t s) { return slots_[s].inc.size() + slots_[s].cons.size(); };
  const std::uint32_t keep = weight(a) >= weight(b) ? a : b;
  const std::uint32_t drop = keep == a ? b : a;

  // Detach the dropped slot's constraints before rewiring ids.
  const std::vector<std::uint32_t> partners = slots_[drop].cons;
  for (std::uint32_t p : partners) remove_constraint_slots(drop, p);

  for (const Incidence& h : slots_[drop].inc) {
    unlink_pair(static_cast<std::uint32_t>(h.edge.index()));
    EdgeRec& moved = edges_[h.edge.index()];
    moved.end[h.side] = keep;
    link_pair(static_cast<std::uint32_t>(h.edge.index()));
    moved.pos[h.side] = static_cast<std::uint32_t>(slots_[keep].inc.size());
    slots_[keep].inc.push_back(h);
    const std::uint32_t other = moved.end[1 - h.side];
    if (other != keep && other != drop) touch_slot(other);
  }
  slots_[drop].inc.clear();
  slots_[drop].inc.shrink_to_fit();
  slots_[drop].alive = false;
  slots_[keep].id = survivor_id;
  slot_of_[survivor_id] = keep;
  slot_of_[dead_id] = kNone;
  --live_vertices_;

  for (std::uint32_t p : partners) {
    const std::uint32_t q = (p == drop) ? keep : p;
    add_constraint_slots(keep, q);
    if (q != keep) touch_slot(q);
  }
  touch_slot(keep);
  return VertexId(survivor_id);
}

std::vector<VertexId> Multigraph::subdivide_edge(EdgeId e, std::size_t k) {
  if (k == 0) throw GraphError("subdivide_edge needs k >= 1");
  const auto [u, v] = endpoints(e);
  delete_edge(e);
  std::vector<VertexId> fresh;
  fresh.reserve(k);
  VertexId prev = u;
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId w = add_vertex();
    add_edge(prev, w);
    fresh.push_back(w);
    prev = w;
  }
  add_edge(prev, v);
  return fresh;
}

bool Multigraph::add_constraint_slots(std::uint32_t a, std::uint32_t b) {
  auto& ca = slots_[a].cons;
  if (std::find(ca.begin(), ca.end(), b) != ca.end()) return false;
  ca.push_back(b);
  if (a != b) slots_[b].cons.push_back(a);
  ++num_constraints_;
  return true;
}

bool Multigraph::remove_constraint_slots(std::uint32_t a, std::uint32_t b) {
  auto& ca = slots_[a].cons;
  auto it = std::find(ca.begin(), ca.end(), b);
  if (it == ca.end()) return false;
  ca.erase(it);
  if (a != b) {
    auto& cb = slots_[b].cons;
    cb.erase(std::find(cb.begin(), cb.end(), a));
  }
  --num_constraints_;
  return true;
}

bool Multigraph::add_constraint(VertexId u, VertexId v) {
  const std::uint32_t a = slot(u);
  const std::uint32_t b = slot(v);
  if (!add_constraint_slots(a, b)) return false;
  touch_slot(a);
  if (b != a) touch_slot(b);
  return true;
}

bool Multigraph::remove_constraint(VertexId u, VertexId v) {
  const std::uint32_t a = slot(u);
  const std::uint32_t b = slot(v);
  if (!remove_constraint_slots(a, b)) return false;
  touch_slot(a);
  if (b != a) touch_slot(b);
  return true;
}

bool Multigraph::is_live(VertexId v) const {
  return v.valid() && v.index() < slot_of_.size() && slot_of_[v.index()] != kNone;
}

bool Multigraph::is_live(EdgeId e) const { return e.valid() && e.index() < edges_.size() && edges_[e.index()].alive; }

std::vector<VertexId> Multigraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_vertices_);
  for (std::size_t i = 0; i < slot_of_.size(); ++i) {
    if (slot_of_[i] != kNone) out.emplace_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

std::vector<EdgeId> Multigraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].alive) out.emplace_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

std::pair<VertexId, VertexId> Multigraph::endpoints(EdgeId e) const {
  const EdgeRec& rec = edge_rec(e);
  VertexId a(slots_[rec.end[0]].id);
  VertexId b(slots_[rec.end[1]].id);
  if (b < a) std::swap(a, b);
  return {a, b};
}

VertexId Multigraph::opposite(EdgeId e, VertexId v) const {
  const EdgeRec& rec = edge_rec(e);
  const std::uint32_t s = slot(v);
  if (rec.end[0] == s) return VertexId(slots_[rec.end[1]].id);
  if (rec.end[1] == s) return VertexId(slots_[rec.end[0]].id);
  throw GraphError("vertex " + std::to_string(v.value) + " is not an endpoint of e" + std::to_string(e.value));
}

VertexId Multigraph::neighbor(const Incidence& h) const {
  return VertexId(slots_[edges_[h.edge.index()].end[1 - h.side]].id);
}

bool Multigraph::is_loop(EdgeId e) const {
  const EdgeRec& rec = edge_rec(e);
  return rec.end[0] == rec.end[1];
}

std::size_t Multigraph::degree(VertexId v) const { return slots_[slot(v)].inc.size(); }

std::span<const Incidence> Multigraph::incidence(VertexId v) const { return slots_[slot(v)].inc; }

std::size_t Multigraph::loop_count(VertexId v) const { return slots_[slot(v)].loops; }

bool Multigraph::has_parallel(VertexId v) const { return slots_[slot(v)].multi > 0; }

std::size_t Multigraph::parallel_count(VertexId u, VertexId v) const {
  const std::uint32_t a = slot(u);
  const std::uint32_t b = slot(v);
  if (a == b) return slots_[a].loops;
  const auto it = pair_edges_.find(pair_key(a, b));
  return it == pair_edges_.end() ? 0 : it->second.size();
}

std::vector<std::pair<VertexId, std::size_t>> Multigraph::neighbor_multiplicities(VertexId v) const {
  const std::uint32_t s = slot(v);
  std::vector<VertexId> ns;
  for (const Incidence& h : slots_[s].inc) {
    const std::uint32_t o = edges_[h.edge.index()].end[1 - h.side];
    if (o != s) ns.emplace_back(slots_[o].id);
  }
  std::sort(ns.begin(), ns.end());
  std::vector<std::pair<VertexId, std::size_t>> out;
  for (VertexId w : ns) {
    if (!out.empty() && out.back().first == w) {
      ++out.back().second;
    } else {
      out.emplace_back(w, 1);
    }
  }
  return out;
}

std::vector<EdgeId> Multigraph::edges_between(VertexId u, VertexId v, std::size_t limit) const {
  const std::uint32_t a = slot(u);
  const std::uint32_t b = slot(v);
  std::vector<EdgeId> out;
  if (a == b) return out;
  const auto it = pair_edges_.find(pair_key(a, b));
  if (it == pair_edges_.end()) return out;
  for (std::uint32_t e : it->second) out.emplace_back(e);
  if (out.size() > limit) {
    std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(limit), out.end());
    out.resize(limit);
  } else {
    std::sort(out.begin(), out.end());
  }
  return out;
}

EdgeId Multigraph::any_edge_between(VertexId u, VertexId v) const {
  const std::uint32_t a = slot(u);
  const std::uint32_t b = slot(v);
  if (a == b) return EdgeId();
  const auto it = pair_edges_.find(pair_key(a, b));
  return it == pair_edges_.end() ? EdgeId() : EdgeId(it->second.back());
}

bool Multigraph::has_constraint(VertexId u, VertexId v) const {
  const std::uint32_t a = slot(u);
  const std::uint32_t b = slot(v);
  const auto& ca = slots_[a].cons;
  return std::find(ca.begin(), ca.end(), b) != ca.end();
}

std::size_t Multigraph::constraint_count(VertexId v) const { return slots_[slot(v)].cons.size(); }

std::vector<VertexId> Multigraph::constraint_partners(VertexId v) const {
  std::vector<VertexId> out;
  for (std::uint32_t p : slots_[slot(v)].cons) out.emplace_back(slots_[p].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexPair> Multigraph::constraints() const {
  std::vector<VertexPair> out;
  out.reserve(num_constraints_);
  for (const Slot& s : slots_) {
    if (!s.alive) continue;
    for (std::uint32_t p : s.cons) {
      if (slots_[p].id >= s.id) out.emplace_back(VertexId(s.id), VertexId(slots_[p].id));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> Multigraph::components() const {
  std::vector<char> seen(slot_of_.size(), 0);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId start : vertices()) {
    if (seen[start.index()]) continue;
    std::vector<VertexId> comp;
    seen[start.index()] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (const Incidence& h : incidence(x)) {
        const VertexId y = neighbor(h);
        if (!seen[y.index()]) {
          seen[y.index()] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Multigraph::is_connected(bool through_constraints) const {
  if (live_vertices_ <= 1) return true;
  std::vector<char> seen(slot_of_.size(), 0);
  const VertexId start = vertices().front();
  std::vector<VertexId> stack{start};
  seen[start.index()] = 1;
  std::size_t reached = 1;
  auto visit = [&](VertexId y) {
    if (!seen[y.index()]) {
      seen[y.index()] = 1;
      ++reached;
      stack.push_back(y);
    }
  };
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const Incidence& h : incidence(x)) visit(neighbor(h));
    if (through_constraints) {
      for (std::uint32_t p : slots_[slot(x)].cons) visit(VertexId(slots_[p].id));
    }
  }
  return reached == live_vertices_;
}

std::size_t Multigraph::betti() const {
  if (live_vertices_ == 0) return 0;
  return live_edges_ + components().size() - live_vertices_;
}

bool Multigraph::is_tree() const {
  return live_vertices_ > 0 && live_edges_ + 1 == live_vertices_ && is_connected();
}

std::vector<VertexId> Multigraph::side_subgraph(VertexId v, VertexId u) const {
  if (u == v) throw GraphError("side_subgraph needs u != v");
  slot(v);
  slot(u);
  std::vector<char> seen(slot_of_.size(), 0);
  seen[v.index()] = 1;
  seen[u.index()] = 1;
  std::vector<VertexId> out{v, u};
  std::vector<VertexId> stack{u};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const Incidence& h : incidence(x)) {
      const VertexId y = neighbor(h);
      if (!seen[y.index()]) {
        seen[y.index()] = 1;
        out.push_back(y);
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Chain Multigraph::walk_chain(VertexId from, EdgeId first) const {
  Chain c;
  c.start = from;
  c.edges.push_back(first);
  EdgeId prev = first;
  VertexId cur = opposite(first, from);
  while (cur != from && degree(cur) == 2) {
    c.interior.push_back(cur);
    const auto inc = incidence(cur);
    const Incidence& next = inc[0].edge == prev ? inc[1] : inc[0];
    prev = next.edge;
    cur = neighbor(next);
    c.edges.push_back(prev);
  }
  c.end = cur;
  return c;
}

std::vector<CandidateCycle> Multigraph::chain_cycles() const {
  std::vector<CandidateCycle> whole;
  std::vector<CandidateCycle> pendant;
  std::vector<CandidateCycle> twin;

  std::vector<char> seen(slot_of_.size(), 0);
  for (const auto& comp : components()) {
    bool all_two = true;
    for (VertexId x : comp) all_two = all_two && degree(x) == 2;
    if (!all_two) continue;
    const VertexId x = comp.front();
    const auto inc = incidence(x);
    // Orient toward the lower-id neighbor.
    const Incidence& h = neighbor(inc[0]) <= neighbor(inc[1]) ? inc[0] : inc[1];
    Chain ch = walk_chain(x, h.edge);
    CandidateCycle cyc;
    cyc.vertices.push_back(x);
    cyc.vertices.insert(cyc.vertices.end(), ch.interior.begin(), ch.interior.end());
    cyc.edges = std::move(ch.edges);
    whole.push_back(std::move(cyc));
  }

  for (VertexId x : vertices()) {
    if (degree(x) <= 2) continue;
    std::vector<Chain> to_higher;
    std::vector<EdgeId> started;
    for (const Incidence& h : incidence(x)) {
      if (std::find(started.begin(), started.end(), h.edge) != started.end()) continue;
      Chain ch = walk_chain(x, h.edge);
      started.push_back(ch.edges.front());
      if (ch.closed()) {
        started.push_back(ch.edges.back());
        CandidateCycle cyc;
        cyc.vertices.push_back(x);
        cyc.vertices.insert(cyc.vertices.end(), ch.interior.begin(), ch.interior.end());
        cyc.edges = std::move(ch.edges);
        cyc.branch.push_back(x);
        pendant.push_back(std::move(cyc));
      } else if (ch.end > x && degree(ch.end) > 2) {
        to_higher.push_back(std::move(ch));
      }
    }
    std::stable_sort(to_higher.begin(), to_higher.end(),
                     [](const Chain& p, const Chain& q) { return p.end < q.end; });
    for (std::size_t i = 0; i < to_higher.size(); ++i) {
      for (std::size_t j = i + 1; j < to_higher.size() && to_higher[j].end == to_higher[i].end; ++j) {
        const Chain& p = to_higher[i];
        const Chain& q = to_higher[j];
        CandidateCycle cyc;
        cyc.vertices.push_back(x);
        cyc.vertices.insert(cyc.vertices.end(), p.interior.begin(), p.interior.end());
        cyc.vertices.push_back(p.end);
        cyc.vertices.insert(cyc.vertices.end(), q.interior.rbegin(), q.interior.rend());
        cyc.edges = p.edges;
        cyc.edges.insert(cyc.edges.end(), q.edges.rbegin(), q.edges.rend());
        cyc.branch = {x, p.end};
        twin.push_back(std::move(cyc));
      }
    }
  }

  auto shorter = [](const CandidateCycle& p, const CandidateCycle& q) { return p.edges.size() < q.edges.size(); };
  std::stable_sort(pendant.begin(), pendant.end(), shorter);
  std::stable_sort(twin.begin(), twin.end(), shorter);
  std::vector<CandidateCycle> out = std::move(whole);
  for (auto& c : pendant) out.push_back(std::move(c));
  for (auto& c : twin) out.push_back(std::move(c));
  return out;
}

bool Multigraph::connected_with_constraints(VertexId u, VertexId v, std::span<const EdgeId> excluded) const {
  PathQuery q;
  return q.connected(*this, u, v, excluded, true);
}

std::vector<VertexId> Multigraph::take_touched() {
  std::vector<VertexId> out;
  out.swap(touched_);
  return out;
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.num_constraints() != b.num_constraints()) {
    return false;
  }
  if (a.vertices() != b.vertices()) return false;
  auto edge_list = [](const Multigraph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (EdgeId e : g.edges()) out.push_back(g.endpoints(e));
    std::sort(out.begin(), out.end());
    return out;
  };
  return edge_list(a) == edge_list(b) && a.constraints() == b.constraints();
}

}  // namespace hyperell
