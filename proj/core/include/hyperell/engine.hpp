#ifndef HYPERELL_ENGINE_HPP
#define HYPERELL_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperell/multigraph.hpp"
#include "hyperell/rules.hpp"

namespace hyperell {

enum class Reason : std::uint8_t {
  ReducedToEmpty,
  TwoTrees,
  Stuck,
  TreewidthReject,
  ConflictingConstraints,
  DegreeMismatch,
  Disconnected,
};

std::string_view to_string(Reason r);

struct EngineOptions {
  /// Per-vertex rule order; empty means the flavor default. Must list the
  /// same kinds as the default when given.
  std::vector<RuleKind> priority;
  /// Shuffles the rule order with this seed.
  std::optional<std::uint64_t> shuffle_seed;
  bool treewidth_precheck = true;
  /// Stable flavors: stop at a constrained leaf whose partner has another
  /// degree while the guard holds. A vertex with two constraints always stops.
  bool eager_no = true;
  bool keep_trace = true;
};

struct Verdict {
  Flavor flavor = Flavor::Dgon;
  bool yes = false;
  Reason reason = Reason::Stuck;
  /// Preprocessing steps first, then main-loop steps.
  std::vector<ReductionStep> trace;
  std::size_t preprocess_steps = 0;
  std::size_t main_steps = 0;
  /// Vertex count after preprocessing and the matching step budget.
  std::size_t vertices_after_preprocess = 0;
  std::size_t budget = 0;
  bool is_tree = false;
  /// Rule instances found only by the final full rescan.
  std::size_t late_finds = 0;
};

/// Decides whether the given gonality flavor is at most 2.
Verdict run(Multigraph g, Flavor f, const EngineOptions& options = {});

/// Applies one rule instance in fixed global order: end rules, then each
/// rule kind in default priority over vertices in ascending id order.
std::optional<ReductionStep> step(Multigraph& g, Flavor f);

/// 3n for dgon, n + 2·4n + n for the stable flavors.
std::size_t rule_application_budget(std::size_t n, Flavor f);

/// n + 2m + (number of constraints).
std::size_t potential(const Multigraph& g);

/// Every leaf and degree-2 vertex has at least one constraint.
bool stable_guard(const Multigraph& g);

/// Tree in the flavor's sense; dgon ignores loops.
bool is_tree_for(const Multigraph& g, Flavor f);

}  // namespace hyperell

#endif  // HYPERELL_ENGINE_HPP
