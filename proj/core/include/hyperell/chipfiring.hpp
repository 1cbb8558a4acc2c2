#ifndef HYPERELL_CHIPFIRING_HPP
#define HYPERELL_CHIPFIRING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperell/multigraph.hpp"

namespace hyperell {

/// Chips per vertex, indexed by ChipGraph position. Negative entries are debt.
using Divisor = std::vector<std::int64_t>;
/// Firing counts per vertex, indexed like Divisor.
using FiringVector = std::vector<std::int64_t>;
/// Nested firing sets A_0 ⊆ ... ⊆ A_k = V as sorted index lists.
using LevelSets = std::vector<std::vector<std::size_t>>;

class ChipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::int64_t divisor_degree(const Divisor& d);
bool is_effective(const Divisor& d);

/// Dense loop-free snapshot of a multigraph for divisor arithmetic. Vertex i is
/// the i-th live vertex in ascending id order.
class ChipGraph {
 public:
  explicit ChipGraph(const Multigraph& g);

  std::size_t size() const { return ids_.size(); }
  VertexId vertex(std::size_t i) const { return ids_[i]; }
  std::size_t index_of(VertexId v) const;
  /// Non-loop degree.
  std::int64_t degree(std::size_t i) const { return deg_[i]; }
  /// (neighbor index, multiplicity), ascending.
  std::span<const std::pair<std::size_t, std::int64_t>> neighbors(std::size_t i) const { return adj_[i]; }
  std::int64_t multiplicity(std::size_t i, std::size_t j) const;
  bool connected() const { return connected_; }

  Divisor unit(std::size_t i, std::int64_t chips = 1) const;

 private:
  std::vector<VertexId> ids_;
  std::vector<std::size_t> pos_;  // vertex id -> index, SIZE_MAX if absent
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj_;
  std::vector<std::int64_t> deg_;
  bool connected_ = true;
};

/// L·f. Loops contribute nothing.
Divisor apply_laplacian(const ChipGraph& g, const FiringVector& f);
/// D - L·1_A.
Divisor fire_set(const ChipGraph& g, const Divisor& d, std::span<const std::size_t> a);
/// Every a in A holds at least outdeg_A(a) chips.
bool is_valid_firing(const ChipGraph& g, const Divisor& d, std::span<const std::size_t> a);

LevelSets level_sets(const FiringVector& f);
/// [D_0 = D, D_1, ..., D_k] with D_{i+1} = D_i - L·1_{A_i}.
std::vector<Divisor> replay(const ChipGraph& g, const Divisor& d, const LevelSets& ls);

/// The unique q-reduced divisor equivalent to `d`.
Divisor reduce_divisor(const ChipGraph& g, const Divisor& d, std::size_t q);
/// Same class; base vertex is the lowest id.
bool equivalent(const ChipGraph& g, const Divisor& d, const Divisor& e);
bool effective_equivalent(const ChipGraph& g, const Divisor& d);
/// |D - 1_v| nonempty for every vertex v.
bool rank_at_least_one(const ChipGraph& g, const Divisor& d);

/// Brute force: some effective degree-2 divisor has rank >= 1. Loops are
/// ignored; trees count as yes. A disconnected graph is yes exactly when it
/// consists of two trees.
bool dgon_at_most_2(const Multigraph& g);

/// Brute force over effective degree-2 divisors with firing moves that are
/// valid and split no constraint pair. True when one class reaches every
/// vertex and satisfies every constraint. Throws above `max_vertices`.
bool constrained_suitable_exists(const Multigraph& g, std::size_t max_vertices = 12);

/// Chips at positions {a, b} and {c, d} on a cycle of length L are
/// equivalent on that cycle.
bool cycle_pair_equivalent(std::size_t length, std::pair<std::size_t, std::size_t> p,
                           std::pair<std::size_t, std::size_t> q);

}  // namespace hyperell

#endif  // HYPERELL_CHIPFIRING_HPP
