#ifndef HYPERELL_MULTIGRAPH_HPP
#define HYPERELL_MULTIGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <unordered_map>
#include <vector>

#include "hyperell/ids.hpp"

namespace hyperell {

/// Raised on dead handles and on mutations that would break graph invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One endpoint occurrence of an edge at a vertex. A loop contributes two.
struct Incidence {
  EdgeId edge;
  std::uint8_t side = 0;  // which endpoint slot of `edge` this vertex occupies
};

/// Maximal path whose interior vertices all have black degree exactly 2.
struct Chain {
  VertexId start;
  VertexId end;
  std::vector<VertexId> interior;
  std::vector<EdgeId> edges;  // edges.size() == interior.size() + 1

  bool closed() const { return start == end; }
  std::size_t length() const { return edges.size(); }
};

/// A cycle made of one or two chains. `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % size]`.
struct CandidateCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<VertexId> branch;  // cycle vertices of degree > 2, at most two
};

/// Finite multigraph with loops, parallel edges and a separate set of
/// constraint pairs (the colored edges of the reduction rules).
///
/// Degrees count black edges only, loops twice. Constraint pairs never
/// contribute to degree. Vertex and edge ids are never reused; contraction
/// keeps the lower of the two vertex ids.
class Multigraph {
 public:
  Multigraph() = default;
  /// `n` isolated vertices with ids 0..n-1.
  explicit Multigraph(std::size_t n);

  // -- mutation ------------------------------------------------------------
  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);
  void delete_edge(EdgeId e);
  /// Deletes `v` together with its incident edges. Throws if a constraint
  /// still references `v`.
  void delete_vertex(VertexId v);
  /// Merges the endpoints of a non-loop edge into the lower id and returns it.
  /// Other edges between the endpoints become loops; constraints are
  /// rewritten onto the survivor and de-duplicated.
  VertexId contract_edge(EdgeId e);
  /// Replaces `e` by a path through `k` fresh vertices.
  std::vector<VertexId> subdivide_edge(EdgeId e, std::size_t k);

  /// Returns false when the pair was already present.
  bool add_constraint(VertexId u, VertexId v);
  /// Returns false when the pair was absent.
  bool remove_constraint(VertexId u, VertexId v);

  // -- vertices and edges --------------------------------------------------
  bool is_live(VertexId v) const;
  bool is_live(EdgeId e) const;
  std::size_t num_vertices() const { return live_vertices_; }
  std::size_t num_edges() const { return live_edges_; }
  bool empty() const { return live_vertices_ == 0; }
  /// Number of vertex ids handed out so far (live or not).
  std::size_t vertex_id_bound() const { return slot_of_.size(); }
  std::size_t edge_id_bound() const { return edges_.size(); }

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  VertexId opposite(EdgeId e, VertexId v) const;
  /// Vertex at the far end of an incidence entry.
  VertexId neighbor(const Incidence& h) const;
  bool is_loop(EdgeId e) const;

  std::size_t degree(VertexId v) const;
  std::span<const Incidence> incidence(VertexId v) const;
  std::size_t loop_count(VertexId v) const;
  std::size_t parallel_count(VertexId u, VertexId v) const;
  /// Some neighbor of `v` is joined to it by two or more edges.
  bool has_parallel(VertexId v) const;
  /// Distinct non-loop neighbors with edge multiplicities, ascending by id.
  std::vector<std::pair<VertexId, std::size_t>> neighbor_multiplicities(VertexId v) const;
  /// Up to `limit` edge ids joining u and v (u != v), ascending.
  std::vector<EdgeId> edges_between(VertexId u, VertexId v, std::size_t limit = SIZE_MAX) const;
  /// One edge joining u and v (u != v) in constant time; invalid if none.
  EdgeId any_edge_between(VertexId u, VertexId v) const;

  // -- constraints ---------------------------------------------------------
  bool has_constraint(VertexId u, VertexId v) const;
  std::size_t constraint_count(VertexId v) const;
  /// Partners of `v` in its constraints; `v` itself for a self-pair.
  std::vector<VertexId> constraint_partners(VertexId v) const;
  std::vector<VertexPair> constraints() const;
  std::size_t num_constraints() const { return num_constraints_; }
  bool has_constraint_loop(VertexId v) const { return has_constraint(v, v); }

  // -- structure -----------------------------------------------------------
  /// Components of the black graph, each sorted, ordered by smallest member.
  std::vector<std::vector<VertexId>> components() const;
  bool is_connected(bool through_constraints = false) const;
  /// m - n + (#components), black edges only.
  std::size_t betti() const;
  bool is_tree() const;
  /// {v} plus the component of u in G - v.
  std::vector<VertexId> side_subgraph(VertexId v, VertexId u) const;
  /// Walks from `from` along `first` through degree-2 vertices.
  Chain walk_chain(VertexId from, EdgeId first) const;
  std::vector<CandidateCycle> chain_cycles() const;
  /// Whether u and v are joined in (black edges minus `excluded`) together
  /// with constraint edges.
  bool connected_with_constraints(VertexId u, VertexId v, std::span<const EdgeId> excluded) const;

  // -- change tracking -----------------------------------------------------
  /// When enabled, every mutation records the vertices whose degree,
  /// neighborhood or constraints changed.
  void set_touch_tracking(bool on) { track_touched_ = on; }
  std::vector<VertexId> take_touched();
  /// Bumped by every mutation.
  std::uint64_t version() const { return version_; }

  /// Same live ids, same edges with the same endpoints, same constraints.
  friend bool operator==(const Multigraph& a, const Multigraph& b);

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  struct Slot {
    std::vector<Incidence> inc;
    std::vector<std::uint32_t> cons;  // partner slots
    std::uint32_t id = kNone;
    std::uint32_t loops = 0;
    std::uint32_t multi = 0;  // neighbors joined by two or more edges
    bool alive = false;
  };
  struct EdgeRec {
    std::uint32_t end[2] = {kNone, kNone};  // slots
    std::uint32_t pos[2] = {kNone, kNone};  // positions in the slots' incidence lists
    std::uint32_t pair_pos = kNone;          // position in pair_edges_, non-loops only
    bool alive = false;
  };

  std::uint32_t slot(VertexId v) const;
  const EdgeRec& edge_rec(EdgeId e) const;
  void unlink_edge(std::uint32_t e);
  void link_pair(std::uint32_t e);
  void unlink_pair(std::uint32_t e);
  static std::uint64_t pair_key(std::uint32_t a, std::uint32_t b);
  bool add_constraint_slots(std::uint32_t a, std::uint32_t b);
  bool remove_constraint_slots(std::uint32_t a, std::uint32_t b);
  void touch_slot(std::uint32_t s);

  std::vector<Slot> slots_;
  std::vector<std::uint32_t> slot_of_;  // vertex id -> slot, kNone once dead
  std::vector<EdgeRec> edges_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> pair_edges_;  // non-loop edges by slot pair
  std::size_t live_vertices_ = 0;
  std::size_t live_edges_ = 0;
  std::size_t num_constraints_ = 0;
  std::uint64_t version_ = 0;
  bool track_touched_ = false;
  std::vector<VertexId> touched_;
};

}  // namespace hyperell

#endif  // HYPERELL_MULTIGRAPH_HPP
