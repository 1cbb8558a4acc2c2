#include "hyperell/rules.hpp"

#include <array>
#include <unordered_map>

#include "hyperell/chipfiring.hpp"

namespace hyperell {

namespace {

constexpr std::array kDgonPriority = {RuleKind::T1, RuleKind::T2, RuleKind::T3, RuleKind::C2,
                                      RuleKind::L,  RuleKind::M,  RuleKind::C3, RuleKind::C1};
constexpr std::array kSgonPriority = {RuleKind::T1, RuleKind::T2, RuleKind::T3, RuleKind::S1, RuleKind::S2,
                                      RuleKind::L,  RuleKind::P1, RuleKind::P2, RuleKind::M};
constexpr std::array kSdgonPriority = {RuleKind::T1, RuleKind::T2, RuleKind::T3, RuleKind::S1a, RuleKind::S1b,
                                       RuleKind::S2, RuleKind::L,  RuleKind::P1, RuleKind::P2,  RuleKind::M};
constexpr std::array kDgonEnd = {RuleKind::E1, RuleKind::E2};
constexpr std::array kStableEnd = {RuleKind::E1, RuleKind::E2, RuleKind::E3};
constexpr std::array kPreprocess = {RuleKind::M, RuleKind::L};

}  // namespace

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::Dgon: return "dgon";
    case Flavor::Sgon: return "sgon";
    case Flavor::Sdgon: return "sdgon";
  }
  return "?";
}

std::string_view to_string(RuleKind k) {
  static constexpr std::array<std::string_view, 17> names = {"E1", "E2", "E3", "T1", "T2", "T3", "S1", "S1a", "S1b",
                                                             "S2", "L",  "P1", "P2", "M",  "C1", "C2", "C3"};
  return names[static_cast<std::size_t>(k)];
}

std::optional<Flavor> parse_flavor(std::string_view s) {
  if (s == "dgon") return Flavor::Dgon;
  if (s == "sgon") return Flavor::Sgon;
  if (s == "sdgon") return Flavor::Sdgon;
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const RuleId& r) { return os << to_string(r.kind); }

std::span<const RuleKind> default_priority(Flavor f) {
  switch (f) {
    case Flavor::Dgon: return kDgonPriority;
    case Flavor::Sgon: return kSgonPriority;
    case Flavor::Sdgon: return kSdgonPriority;
  }
  return {};
}

std::span<const RuleKind> end_rules(Flavor f) {
  if (f == Flavor::Dgon) return kDgonEnd;
  return kStableEnd;
}

std::span<const RuleKind> preprocess_rules(Flavor) { return kPreprocess; }

void replay_step(Multigraph& g, const ReductionStep& s) {
  for (const EditOp& op : s.ops) {
    switch (op.kind) {
      case EditOp::Kind::AddVertex: {
        const VertexId got = g.add_vertex();
        if (got != op.u) throw GraphError("replay diverged: vertex id " + std::to_string(got.value));
        break;
      }
      case EditOp::Kind::DeleteVertex: g.delete_vertex(op.u); break;
      case EditOp::Kind::DeleteEdge: g.delete_edge(op.e); break;
      case EditOp::Kind::ContractEdge: {
        const VertexId got = g.contract_edge(op.e);
        if (got != op.u) throw GraphError("replay diverged: contraction survivor " + std::to_string(got.value));
        break;
      }
      case EditOp::Kind::AddConstraint: g.add_constraint(op.u, op.v); break;
      case EditOp::Kind::RemoveConstraint: g.remove_constraint(op.u, op.v); break;
    }
  }
}

VertexId StepRecorder::add_vertex() {
  const VertexId v = g_.add_vertex();
  step_.added_vertices.push_back(v);
  step_.ops.push_back({EditOp::Kind::AddVertex, v, {}, {}});
  return v;
}

void StepRecorder::delete_edge(EdgeId e) {
  g_.delete_edge(e);
  ++step_.removed_edges;
  step_.ops.push_back({EditOp::Kind::DeleteEdge, {}, {}, e});
}

void StepRecorder::drop_constraints(VertexId v) {
  for (VertexId p : g_.constraint_partners(v)) remove_constraint(v, p);
}

void StepRecorder::delete_vertex(VertexId v) {
  drop_constraints(v);
  std::size_t halves = 0;
  for (const Incidence& h : g_.incidence(v)) halves += g_.is_loop(h.edge) ? 1 : 2;
  step_.removed_edges += halves / 2;
  g_.delete_vertex(v);
  step_.removed_vertices.push_back(v);
  step_.ops.push_back({EditOp::Kind::DeleteVertex, v, {}, {}});
}

VertexId StepRecorder::contract(EdgeId e) {
  const auto [a, b] = g_.endpoints(e);
  const VertexId survivor = g_.contract_edge(e);
  const VertexId absorbed = survivor == a ? b : a;
  ++step_.removed_edges;
  step_.removed_vertices.push_back(absorbed);
  step_.contracted.emplace_back(survivor, absorbed);
  step_.ops.push_back({EditOp::Kind::ContractEdge, survivor, {}, e});
  return survivor;
}

void StepRecorder::add_constraint(VertexId u, VertexId v) {
  if (g_.add_constraint(u, v)) {
    step_.added_constraint = VertexPair(u, v);
    step_.ops.push_back({EditOp::Kind::AddConstraint, u, v, {}});
  }
}

void StepRecorder::remove_constraint(VertexId u, VertexId v) {
  if (g_.remove_constraint(u, v)) step_.ops.push_back({EditOp::Kind::RemoveConstraint, u, v, {}});
}

std::optional<ReductionStep> try_rule(RuleContext& ctx, Flavor f, VertexId v, RuleKind k) {
  if (f == Flavor::Dgon) return dgon::try_rule(ctx, v, k);
  return stable::try_rule(ctx, f, v, k);
}

std::optional<ReductionStep> try_end(RuleContext& ctx, Flavor f, RuleKind k) {
  if (f == Flavor::Dgon) return dgon::try_end(ctx, k);
  return stable::try_end(ctx, f, k);
}

bool cycle_constraints_compatible(const Multigraph& g, const CandidateCycle& c, std::optional<VertexPair> extra) {
  const std::size_t len = c.vertices.size();
  std::unordered_map<std::uint32_t, std::size_t> pos;
  pos.reserve(len * 2);
  for (std::size_t i = 0; i < len; ++i) pos.emplace(c.vertices[i].value, i);

  std::optional<std::pair<std::size_t, std::size_t>> first;
  auto consistent = [&](std::size_t a, std::size_t b) {
    if (!first) {
      first = std::make_pair(a, b);
      return true;
    }
    return cycle_pair_equivalent(len, *first, {a, b});
  };
  if (extra) {
    auto a = pos.find(extra->first.value);
    auto b = pos.find(extra->second.value);
    if (a == pos.end() || b == pos.end()) return false;
    consistent(a->second, b->second);
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (g.constraint_count(c.vertices[i]) == 0) continue;
    for (VertexId p : g.constraint_partners(c.vertices[i])) {
      auto it = pos.find(p.value);
      if (it == pos.end()) return false;
      if (!consistent(i, it->second)) return false;
    }
  }
  return true;
}

}  // namespace hyperell
