#include <algorithm>
#include <unordered_set>

#include "hyperell/rules.hpp"

namespace hyperell::dgon {

namespace {

constexpr RuleId rule(RuleKind k) { return {Flavor::Dgon, k}; }

VertexId leaf_neighbor(const Multigraph& g, VertexId v) { return g.neighbor(g.incidence(v)[0]); }

bool sole_constraint(const Multigraph& g, VertexId v, VertexId partner) {
  return g.constraint_count(v) == 1 && g.has_constraint(v, partner);
}

CandidateCycle close_chain(VertexId start, const std::vector<VertexId>& interior, const std::vector<EdgeId>& edges) {
  CandidateCycle c;
  c.vertices.push_back(start);
  c.vertices.insert(c.vertices.end(), interior.begin(), interior.end());
  c.edges = edges;
  return c;
}

/// Cycle s -p-> t -q-> s; both chains start at s.
CandidateCycle join_chains(VertexId s, VertexId t, const Chain& p, const Chain& q) {
  CandidateCycle c;
  c.vertices.push_back(s);
  c.vertices.insert(c.vertices.end(), p.interior.begin(), p.interior.end());
  c.vertices.push_back(t);
  c.vertices.insert(c.vertices.end(), q.interior.rbegin(), q.interior.rend());
  c.edges = p.edges;
  c.edges.insert(c.edges.end(), q.edges.rbegin(), q.edges.rend());
  c.branch = {s, t};
  return c;
}

/// Chain through a degree-2 vertex that is not a lone loop. A closed result
/// starting at v is a whole cycle of degree-2 vertices.
std::optional<Chain> chain_through(const Multigraph& g, VertexId v) {
  const auto inc = g.incidence(v);
  if (inc[0].edge == inc[1].edge) return std::nullopt;
  Chain a = g.walk_chain(v, inc[0].edge);
  if (a.closed()) return a;
  Chain b = g.walk_chain(v, inc[1].edge);
  Chain p;
  p.start = a.end;
  p.end = b.end;
  p.interior.assign(a.interior.rbegin(), a.interior.rend());
  p.interior.push_back(v);
  p.interior.insert(p.interior.end(), b.interior.begin(), b.interior.end());
  p.edges.assign(a.edges.rbegin(), a.edges.rend());
  p.edges.insert(p.edges.end(), b.edges.begin(), b.edges.end());
  return p;
}

void settle_chain(RuleContext& ctx, const Chain& p) { ctx.settled = p.interior; }

std::optional<ReductionStep> delete_cycle_add(RuleContext& ctx, RuleKind k, const CandidateCycle& c, VertexPair add) {
  StepRecorder rec(ctx.g, rule(k));
  auto kept = [&](VertexId x) { return x == add.first || x == add.second; };
  for (VertexId x : c.vertices) {
    if (!kept(x)) rec.drop_constraints(x);
  }
  for (VertexId x : c.vertices) {
    if (!kept(x)) rec.delete_vertex(x);
  }
  for (EdgeId e : c.edges) {
    if (ctx.g.is_live(e)) rec.delete_edge(e);
  }
  rec.add_constraint(add.first, add.second);
  return rec.finish();
}

/// Whether s and t stay joined once cycle c, holding edges e and f, is
/// removed. Edges only ever disappear under these rules, so a cut seen in
/// older labels is still a cut.
bool joined_without(RuleContext& ctx, const CandidateCycle& c, EdgeId e, EdgeId f) {
  const Multigraph& g = ctx.g;
  CutLabels& cuts = ctx.paths.cuts();
  auto cut = [&] { return cuts.label(e) != 0 && cuts.label(e) == cuts.label(f); };
  if (cuts.computed_for(g) && cuts.version() <= g.version()) {
    if (cut()) return false;
    if (cuts.version() == g.version()) return true;
  }
  if (!cuts.computed_for(g) || cuts.work() >= g.num_vertices() + g.num_edges()) {
    cuts.compute(g);
    return !cut();
  }
  const bool joined = ctx.paths.connected(g, c.branch[0], c.branch[1], c.edges, false);
  cuts.add_work(ctx.paths.last_visited() + 1);
  return joined;
}

/// Twin of chain `p` (oriented from s to t) against chain `q`, when the
/// constraints fit and s, t stay joined without the twin. `third` means
/// another s-t chain is already known.
std::optional<ReductionStep> try_twin(RuleContext& ctx, const Chain& p, const Chain& q, bool third) {
  const VertexId s = p.start;
  const VertexId t = p.end;
  const CandidateCycle c = join_chains(s, t, p, q);
  if (!cycle_constraints_compatible(ctx.g, c, VertexPair(s, t))) return std::nullopt;
  if (!third) {
    if (!ctx.allow_expensive) {
      ctx.deferred = true;
      return std::nullopt;
    }
    if (!joined_without(ctx, c, p.edges.front(), q.edges.front())) return std::nullopt;
  }
  return delete_cycle_add(ctx, RuleKind::C3, c, VertexPair(s, t));
}

/// C3 anchored inside chain p: scans the other chains leaving p.start and
/// stops at the first usable twin.
std::optional<ReductionStep> twin_from_chain(RuleContext& ctx, Chain p) {
  const Multigraph& g = ctx.g;
  if (g.degree(p.end) < g.degree(p.start)) {
    std::swap(p.start, p.end);
    std::reverse(p.interior.begin(), p.interior.end());
    std::reverse(p.edges.begin(), p.edges.end());
  }
  std::optional<Chain> fits;  // compatible twin still waiting for a third chain
  std::size_t seen = 0;
  for (const Incidence& h : g.incidence(p.start)) {
    if (h.edge == p.edges.front() || g.is_loop(h.edge)) continue;
    Chain q = g.walk_chain(p.start, h.edge);
    if (q.end != p.end) continue;
    ++seen;
    if (fits) return try_twin(ctx, p, *fits, true);
    if (seen >= 2) {
      if (auto s = try_twin(ctx, p, q, true)) return s;
      continue;
    }
    const CandidateCycle c = join_chains(p.start, p.end, p, q);
    if (cycle_constraints_compatible(g, c, VertexPair(p.start, p.end))) fits = std::move(q);
  }
  if (fits) return try_twin(ctx, p, *fits, false);
  return std::nullopt;
}

/// Chains leaving `s`, each walked once; a closed chain is reported once.
std::vector<Chain> chains_from(const Multigraph& g, VertexId s) {
  std::vector<Chain> out;
  std::unordered_set<std::uint32_t> closing;
  for (const Incidence& h : g.incidence(s)) {
    if (closing.count(h.edge.value) != 0) continue;
    Chain ch = g.walk_chain(s, h.edge);
    if (ch.closed()) closing.insert(ch.edges.back().value);
    out.push_back(std::move(ch));
  }
  return out;
}

std::optional<ReductionStep> apply_t1(RuleContext& ctx, VertexId v) {
  Multigraph& g = ctx.g;
  if (g.degree(v) != 1 || g.constraint_count(v) != 0) return std::nullopt;
  StepRecorder rec(g, rule(RuleKind::T1));
  rec.delete_vertex(v);
  return rec.finish();
}

std::optional<ReductionStep> apply_t2(RuleContext& ctx, VertexId v) {
  Multigraph& g = ctx.g;
  if (g.degree(v) != 1 || !sole_constraint(g, v, v)) return std::nullopt;
  const VertexId u = leaf_neighbor(g, v);
  StepRecorder rec(g, rule(RuleKind::T2));
  rec.delete_vertex(v);
  rec.add_constraint(u, u);
  return rec.finish();
}

std::optional<ReductionStep> apply_t3(RuleContext& ctx, VertexId v) {
  Multigraph& g = ctx.g;
  if (g.degree(v) != 1 || g.constraint_count(v) != 1) return std::nullopt;
  const VertexId w = g.constraint_partners(v).front();
  if (w == v || g.degree(w) != 1 || !sole_constraint(g, w, v)) return std::nullopt;
  const VertexId u1 = leaf_neighbor(g, v);
  const VertexId u2 = leaf_neighbor(g, w);
  if (u1 == w) return std::nullopt;  // the two leaves form a lone edge
  StepRecorder rec(g, rule(RuleKind::T3));
  rec.delete_vertex(v);
  rec.delete_vertex(w);
  rec.add_constraint(u1, u2);
  return rec.finish();
}

std::optional<ReductionStep> apply_loops(RuleContext& ctx, VertexId v) {
  Multigraph& g = ctx.g;
  if (g.loop_count(v) == 0) return std::nullopt;
  std::vector<EdgeId> loops;
  for (const Incidence& h : g.incidence(v)) {
    if (h.side == 0 && g.is_loop(h.edge)) loops.push_back(h.edge);
  }
  if (loops.empty()) return std::nullopt;
  std::sort(loops.begin(), loops.end());
  StepRecorder rec(g, rule(RuleKind::L));
  for (EdgeId e : loops) rec.delete_edge(e);
  return rec.finish();
}

std::optional<ReductionStep> apply_multi(RuleContext& ctx, VertexId v) {
  Multigraph& g = ctx.g;
  if (g.degree(v) < 3 || !g.has_parallel(v)) return std::nullopt;
  for (const auto& [u, mult] : g.neighbor_multiplicities(v)) {
    if (mult < 3) continue;
    const std::size_t k = (mult - 1) / 2;
    const std::vector<EdgeId> es = g.edges_between(v, u, 2 * k);
    StepRecorder rec(g, rule(RuleKind::M));
    for (EdgeId e : es) rec.delete_edge(e);
    rec.add_constraint(v, u);
    return rec.finish();
  }
  return std::nullopt;
}

std::optional<ReductionStep> apply_c1(RuleContext& ctx, VertexId v) {
  Multigraph& g = ctx.g;
  if (g.degree(v) != 2) return std::nullopt;
  const auto p = chain_through(g, v);
  if (!p || !p->closed() || p->start != v) return std::nullopt;
  const CandidateCycle c = close_chain(v, p->interior, p->edges);
  if (!cycle_constraints_compatible(g, c, std::nullopt)) {
    ctx.settled = c.vertices;
    return std::nullopt;
  }
  StepRecorder rec(g, rule(RuleKind::C1));
  for (VertexId x : c.vertices) rec.drop_constraints(x);
  for (VertexId x : c.vertices) rec.delete_vertex(x);
  rec.add_vertex();
  return rec.finish();
}

std::optional<ReductionStep> pendant_at(RuleContext& ctx, const Chain& p) {
  const VertexId x = p.start;
  CandidateCycle c = close_chain(x, p.interior, p.edges);
  c.branch = {x};
  if (!cycle_constraints_compatible(ctx.g, c, VertexPair(x, x))) return std::nullopt;
  return delete_cycle_add(ctx, RuleKind::C2, c, VertexPair(x, x));
}

std::optional<ReductionStep> apply_c2(RuleContext& ctx, VertexId v) {
  Multigraph& g = ctx.g;
  const std::size_t deg = g.degree(v);
  if (deg == 2) {
    const auto p = chain_through(g, v);
    if (!p || !p->closed() || p->start == v) return std::nullopt;
    if (auto s = pendant_at(ctx, *p)) return s;
    settle_chain(ctx, *p);
    return std::nullopt;
  }
  if (deg < 3) return std::nullopt;
  for (const Incidence& h : g.incidence(v)) {
    if (g.is_loop(h.edge)) continue;
    const Chain p = g.walk_chain(v, h.edge);
    if (!p.closed()) continue;
    if (auto s = pendant_at(ctx, p)) return s;
  }
  return std::nullopt;
}

std::optional<ReductionStep> apply_c3(RuleContext& ctx, VertexId v) {
  Multigraph& g = ctx.g;
  const std::size_t deg = g.degree(v);
  if (deg == 2) {
    const auto p = chain_through(g, v);
    if (!p || p->closed()) return std::nullopt;
    if (g.degree(p->start) > 2 && g.degree(p->end) > 2) {
      if (auto s = twin_from_chain(ctx, *p)) return s;
    }
    settle_chain(ctx, *p);
    return std::nullopt;
  }
  if (deg < 3) return std::nullopt;
  std::vector<Chain> onward;
  for (Chain& ch : chains_from(g, v)) {
    if (!ch.closed() && g.degree(ch.end) > 2) onward.push_back(std::move(ch));
  }
  std::stable_sort(onward.begin(), onward.end(), [](const Chain& p, const Chain& q) { return p.end < q.end; });
  for (std::size_t i = 0; i < onward.size();) {
    std::size_t j = i;
    while (j < onward.size() && onward[j].end == onward[i].end) ++j;
    for (std::size_t a = i; a < j; ++a) {
      for (std::size_t b = a + 1; b < j; ++b) {
        if (auto s = try_twin(ctx, onward[a], onward[b], j - i >= 3)) return s;
      }
    }
    i = j;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ReductionStep> try_rule(RuleContext& ctx, VertexId v, RuleKind k) {
  if (!ctx.g.is_live(v)) return std::nullopt;
  switch (k) {
    case RuleKind::T1: return apply_t1(ctx, v);
    case RuleKind::T2: return apply_t2(ctx, v);
    case RuleKind::T3: return apply_t3(ctx, v);
    case RuleKind::L: return apply_loops(ctx, v);
    case RuleKind::M: return apply_multi(ctx, v);
    case RuleKind::C1: return apply_c1(ctx, v);
    case RuleKind::C2: return apply_c2(ctx, v);
    case RuleKind::C3: return apply_c3(ctx, v);
    default: return std::nullopt;
  }
}

std::optional<ReductionStep> try_end(RuleContext& ctx, RuleKind k) {
  Multigraph& g = ctx.g;
  if (k == RuleKind::E1) {
    if (g.num_vertices() != 1) return std::nullopt;
    StepRecorder rec(g, rule(RuleKind::E1));
    rec.delete_vertex(g.vertices().front());
    return rec.finish();
  }
  if (k == RuleKind::E2) {
    if (g.num_vertices() != 2 || g.num_edges() != 1 || g.num_constraints() != 1) return std::nullopt;
    const auto vs = g.vertices();
    if (g.parallel_count(vs[0], vs[1]) != 1 || !g.has_constraint(vs[0], vs[1])) return std::nullopt;
    StepRecorder rec(g, rule(RuleKind::E2));
    rec.delete_vertex(vs[0]);
    rec.delete_vertex(vs[1]);
    return rec.finish();
  }
  return std::nullopt;
}

}  // namespace hyperell::dgon
