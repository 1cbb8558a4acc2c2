#include <algorithm>

#include "hyperell/rules.hpp"

namespace hyperell::stable {

namespace {

bool only_self_constraint(const Multigraph& g, VertexId v) {
  return g.constraint_count(v) == 1 && g.has_constraint(v, v);
}

bool blocked_by_guard(RuleContext& ctx, VertexId v) {
  if (ctx.guard) return false;
  ctx.guard_blocked.push_back(v);
  return true;
}

/// Lowest-id edge from v to its lowest-id neighbor; v must not be a lone loop.
EdgeId edge_to_lowest_neighbor(const Multigraph& g, VertexId v) {
  VertexId best;
  EdgeId best_edge;
  for (const Incidence& h : g.incidence(v)) {
    const VertexId w = g.neighbor(h);
    if (w == v) continue;
    if (!best.valid() || w < best || (w == best && h.edge < best_edge)) {
      best = w;
      best_edge = h.edge;
    }
  }
  return best_edge;
}

/// Both neighbors of a degree-2 vertex without loops.
std::optional<std::pair<VertexId, VertexId>> two_neighbors(const Multigraph& g, VertexId v) {
  if (g.degree(v) != 2) return std::nullopt;
  const auto inc = g.incidence(v);
  if (inc[0].edge == inc[1].edge) return std::nullopt;
  return std::make_pair(g.neighbor(inc[0]), g.neighbor(inc[1]));
}

std::optional<ReductionStep> contract_leaf(RuleContext& ctx, RuleId id, VertexId v) {
  StepRecorder rec(ctx.g, id);
  rec.contract(ctx.g.incidence(v)[0].edge);
  return rec.finish();
}

std::optional<ReductionStep> apply_t3(RuleContext& ctx, RuleId id, VertexId v) {
  Multigraph& g = ctx.g;
  if (g.degree(v) != 1 || g.constraint_count(v) == 0) return std::nullopt;
  for (VertexId w : g.constraint_partners(v)) {
    if (w == v || g.degree(w) != 1) continue;
    if (g.neighbor(g.incidence(v)[0]) == w) continue;  // lone edge; P1 handles it
    if (blocked_by_guard(ctx, v)) return std::nullopt;
    const EdgeId ev = g.incidence(v)[0].edge;
    const EdgeId ew = g.incidence(w)[0].edge;
    StepRecorder rec(g, id);
    rec.contract(ev);
    rec.contract(ew);
    return rec.finish();
  }
  return std::nullopt;
}

std::optional<ReductionStep> apply_s2(RuleContext& ctx, RuleId id, VertexId v) {
  Multigraph& g = ctx.g;
  if (!only_self_constraint(g, v)) return std::nullopt;
  const auto nb = two_neighbors(g, v);
  if (!nb) return std::nullopt;
  if (blocked_by_guard(ctx, v)) return std::nullopt;
  const auto [u1, u2] = *nb;
  if (u1 != u2) {
    if (!ctx.allow_expensive) {
      ctx.deferred = true;
      return std::nullopt;
    }
    const EdgeId own[2] = {g.incidence(v)[0].edge, g.incidence(v)[1].edge};
    if (!ctx.paths.connected(g, u1, u2, own, true)) return std::nullopt;
  }
  StepRecorder rec(g, id);
  rec.delete_vertex(v);
  rec.add_constraint(u1, u2);
  return rec.finish();
}

std::optional<ReductionStep> apply_loops(RuleContext& ctx, RuleId id, VertexId v, bool add_self) {
  Multigraph& g = ctx.g;
  if (g.loop_count(v) == 0) return std::nullopt;
  std::vector<EdgeId> loops;
  for (const Incidence& h : g.incidence(v)) {
    if (h.side == 0 && g.is_loop(h.edge)) loops.push_back(h.edge);
  }
  if (loops.empty()) return std::nullopt;
  std::sort(loops.begin(), loops.end());
  StepRecorder rec(g, id);
  for (EdgeId e : loops) rec.delete_edge(e);
  if (add_self) rec.add_constraint(v, v);
  return rec.finish();
}

std::optional<ReductionStep> apply_p1(RuleContext& ctx, RuleId id, VertexId v) {
  Multigraph& g = ctx.g;
  if (g.constraint_count(v) == 0 || g.degree(v) == 0) return std::nullopt;
  for (VertexId u : g.constraint_partners(v)) {
    if (u == v) continue;
    const EdgeId e = g.any_edge_between(v, u);
    if (!e.valid()) continue;
    StepRecorder rec(g, id);
    rec.delete_edge(e);
    return rec.finish();
  }
  return std::nullopt;
}

std::optional<ReductionStep> apply_p2(RuleContext& ctx, RuleId id, VertexId v) {
  Multigraph& g = ctx.g;
  if (g.degree(v) < 2 || !g.has_parallel(v)) return std::nullopt;
  for (const auto& [u, mult] : g.neighbor_multiplicities(v)) {
    if (mult < 2) continue;
    const auto es = g.edges_between(v, u, 2);
    if (mult < 3) {
      if (!ctx.allow_expensive) {
        ctx.deferred = true;
        continue;
      }
      if (!ctx.paths.connected(g, v, u, es, true)) continue;
    }
    StepRecorder rec(g, id);
    rec.delete_edge(es[0]);
    rec.delete_edge(es[1]);
    rec.add_constraint(v, u);
    return rec.finish();
  }
  return std::nullopt;
}

std::optional<ReductionStep> apply_multi(RuleContext& ctx, RuleId id, VertexId v) {
  Multigraph& g = ctx.g;
  if (g.degree(v) < 3 || !g.has_parallel(v)) return std::nullopt;
  for (const auto& [u, mult] : g.neighbor_multiplicities(v)) {
    if (mult < 3) continue;
    StepRecorder rec(g, id);
    for (EdgeId e : g.edges_between(v, u)) rec.delete_edge(e);
    rec.add_constraint(v, u);
    return rec.finish();
  }
  return std::nullopt;
}

}  // namespace

std::optional<ReductionStep> try_rule(RuleContext& ctx, Flavor f, VertexId v, RuleKind k) {
  Multigraph& g = ctx.g;
  if (!g.is_live(v)) return std::nullopt;
  const RuleId id{f, k};
  switch (k) {
    case RuleKind::T1:
      if (g.degree(v) == 1 && g.constraint_count(v) == 0) return contract_leaf(ctx, id, v);
      return std::nullopt;
    case RuleKind::T2:
      if (g.degree(v) == 1 && only_self_constraint(g, v)) return contract_leaf(ctx, id, v);
      return std::nullopt;
    case RuleKind::T3: return apply_t3(ctx, id, v);
    case RuleKind::S1:
      if (f != Flavor::Sgon || g.constraint_count(v) != 0 || !two_neighbors(g, v)) return std::nullopt;
      {
        StepRecorder rec(g, id);
        rec.contract(edge_to_lowest_neighbor(g, v));
        return rec.finish();
      }
    case RuleKind::S1a: {
      if (f != Flavor::Sdgon || g.constraint_count(v) != 0) return std::nullopt;
      const auto nb = two_neighbors(g, v);
      if (!nb || nb->first != nb->second) return std::nullopt;
      StepRecorder rec(g, id);
      rec.delete_vertex(v);
      rec.add_constraint(nb->first, nb->first);
      return rec.finish();
    }
    case RuleKind::S1b: {
      if (f != Flavor::Sdgon || g.constraint_count(v) != 0) return std::nullopt;
      const auto nb = two_neighbors(g, v);
      if (!nb || nb->first == nb->second) return std::nullopt;
      StepRecorder rec(g, id);
      rec.contract(edge_to_lowest_neighbor(g, v));
      return rec.finish();
    }
    case RuleKind::S2: return apply_s2(ctx, id, v);
    case RuleKind::L: return apply_loops(ctx, id, v, f == Flavor::Sgon);
    case RuleKind::P1: return apply_p1(ctx, id, v);
    case RuleKind::P2: return apply_p2(ctx, id, v);
    case RuleKind::M: return apply_multi(ctx, id, v);
    default: return std::nullopt;
  }
}

std::optional<ReductionStep> try_end(RuleContext& ctx, Flavor f, RuleKind k) {
  Multigraph& g = ctx.g;
  if (g.num_edges() != 0) return std::nullopt;
  const auto vs = g.vertices();
  bool match = false;
  switch (k) {
    case RuleKind::E1: match = vs.size() == 1 && g.num_constraints() == 0; break;
    case RuleKind::E2: match = vs.size() == 1 && g.num_constraints() == 1 && g.has_constraint(vs[0], vs[0]); break;
    case RuleKind::E3: match = vs.size() == 2 && g.num_constraints() == 1 && g.has_constraint(vs[0], vs[1]); break;
    default: break;
  }
  if (!match) return std::nullopt;
  StepRecorder rec(g, {f, k});
  for (VertexId v : vs) rec.delete_vertex(v);
  return rec.finish();
}

}  // namespace hyperell::stable
