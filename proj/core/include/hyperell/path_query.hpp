#ifndef HYPERELL_PATH_QUERY_HPP
#define HYPERELL_PATH_QUERY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hyperell/multigraph.hpp"

namespace hyperell {

/// Random cycle-space labels of the black edges. Two edges on a common
/// cycle share a label exactly when together they disconnect their
/// component (up to a 2^-64 collision chance). Bridges get 0.
class CutLabels {
 public:
  void compute(const Multigraph& g);
  /// Whether labels exist for this graph object.
  bool computed_for(const Multigraph& g) const { return owner_ == &g; }
  /// Graph version the labels were computed at.
  std::uint64_t version() const { return version_; }
  /// 0 for bridges and for edges created after the last compute.
  std::uint64_t label(EdgeId e) const { return e.index() < label_.size() ? label_[e.index()] : 0; }

  /// Search effort spent since the last compute, for deciding when to refresh.
  std::size_t work() const { return work_; }
  void add_work(std::size_t w) { work_ += w; }

 private:
  std::vector<std::uint64_t> label_;
  std::uint64_t version_ = 0;
  std::uint64_t seed_ = 0x9e3779b97f4a7c15ull;
  std::size_t work_ = 0;
  const Multigraph* owner_ = nullptr;
};

/// Reusable u-v connectivity search. Grows one frontier from each end and
/// alternates between them, so a negative answer costs about twice the
/// smaller side. Scratch arrays are epoch-stamped and never cleared.
class PathQuery {
 public:
  bool connected(const Multigraph& g, VertexId u, VertexId v, std::span<const EdgeId> excluded,
                 bool through_constraints);

  /// Vertices settled by the last query; handy for cost accounting.
  std::size_t last_visited() const { return last_visited_; }

  CutLabels& cuts() { return cuts_; }

 private:
  void grow(const Multigraph& g);
  std::uint32_t next_epoch();

  std::vector<std::uint32_t> vmark_;  // epoch * 2 + side
  std::vector<std::uint32_t> emark_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> queue_[2];
  std::size_t last_visited_ = 0;
  CutLabels cuts_;
};

}  // namespace hyperell

#endif  // HYPERELL_PATH_QUERY_HPP
