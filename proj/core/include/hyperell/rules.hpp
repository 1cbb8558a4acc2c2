#ifndef HYPERELL_RULES_HPP
#define HYPERELL_RULES_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperell/multigraph.hpp"
#include "hyperell/path_query.hpp"

namespace hyperell {

enum class Flavor : std::uint8_t { Dgon, Sgon, Sdgon };

enum class RuleKind : std::uint8_t { E1, E2, E3, T1, T2, T3, S1, S1a, S1b, S2, L, P1, P2, M, C1, C2, C3 };

std::string_view to_string(Flavor f);
std::string_view to_string(RuleKind k);
std::optional<Flavor> parse_flavor(std::string_view s);

struct RuleId {
  Flavor flavor = Flavor::Dgon;
  RuleKind kind = RuleKind::E1;

  friend bool operator==(const RuleId&, const RuleId&) = default;
};

std::ostream& operator<<(std::ostream& os, const RuleId& r);

/// Primitive graph edit; a step's ops replay it exactly on a copy of the
/// graph it was applied to.
struct EditOp {
  enum class Kind : std::uint8_t { AddVertex, DeleteVertex, DeleteEdge, ContractEdge, AddConstraint, RemoveConstraint };
  Kind kind = Kind::AddVertex;
  VertexId u;  // vertex operand; survivor for ContractEdge
  VertexId v;  // second constraint endpoint
  EdgeId e;
};

struct ReductionStep {
  RuleId rule;
  std::vector<VertexId> removed_vertices;  // deleted, or absorbed by contraction
  std::vector<VertexId> added_vertices;
  std::size_t removed_edges = 0;
  std::optional<VertexPair> added_constraint;  // only when newly inserted
  std::vector<std::pair<VertexId, VertexId>> contracted;  // (survivor, absorbed)
  std::vector<EditOp> ops;
};

/// Re-applies the recorded ops. Throws GraphError if the graph diverged.
void replay_step(Multigraph& g, const ReductionStep& s);

/// Mutates a graph while recording a ReductionStep.
class StepRecorder {
 public:
  StepRecorder(Multigraph& g, RuleId rule) : g_(g) { step_.rule = rule; }

  VertexId add_vertex();
  void delete_edge(EdgeId e);
  /// Drops the vertex's constraints, then the vertex and its edges.
  void delete_vertex(VertexId v);
  VertexId contract(EdgeId e);
  void add_constraint(VertexId u, VertexId v);
  void remove_constraint(VertexId u, VertexId v);
  void drop_constraints(VertexId v);

  ReductionStep finish() { return std::move(step_); }

 private:
  Multigraph& g_;
  ReductionStep step_;
};

/// State a rule needs beyond the graph itself.
struct RuleContext {
  RuleContext(Multigraph& graph, PathQuery& query) : g(graph), paths(query) {}

  Multigraph& g;
  PathQuery& paths;
  /// Stable flavors: every leaf and degree-2 vertex carries a constraint.
  bool guard = false;
  /// Degree-2 vertices whose chain was fully examined without a match.
  std::vector<VertexId> settled;
  /// Vertices where a rule failed only because the guard was off.
  std::vector<VertexId> guard_blocked;
  /// When false, rules whose only remaining test is a path query skip it.
  bool allow_expensive = true;
  /// Set when a rule skipped a path query because of `allow_expensive`.
  bool deferred = false;
};

/// Kinds tried per vertex, default order. End rules are not listed; the
/// engine tries them globally.
std::span<const RuleKind> default_priority(Flavor f);
/// End rules of the flavor.
std::span<const RuleKind> end_rules(Flavor f);
/// Kinds applied by Step-1 preprocessing (multi-edge and loop rules).
std::span<const RuleKind> preprocess_rules(Flavor f);

namespace dgon {
std::optional<ReductionStep> try_rule(RuleContext& ctx, VertexId v, RuleKind k);
std::optional<ReductionStep> try_end(RuleContext& ctx, RuleKind k);
}  // namespace dgon

namespace stable {
std::optional<ReductionStep> try_rule(RuleContext& ctx, Flavor f, VertexId v, RuleKind k);
std::optional<ReductionStep> try_end(RuleContext& ctx, Flavor f, RuleKind k);
}  // namespace stable

/// Dispatch on flavor.
std::optional<ReductionStep> try_rule(RuleContext& ctx, Flavor f, VertexId v, RuleKind k);
std::optional<ReductionStep> try_end(RuleContext& ctx, Flavor f, RuleKind k);

/// Positions of constraints along a cycle are consistent (every touching
/// constraint lies on the cycle, all position sums agree mod length).
bool cycle_constraints_compatible(const Multigraph& g, const CandidateCycle& c, std::optional<VertexPair> extra);

}  // namespace hyperell

#endif  // HYPERELL_RULES_HPP
