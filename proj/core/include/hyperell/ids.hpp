#ifndef HYPERELL_IDS_HPP
#define HYPERELL_IDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <utility>

namespace hyperell {

/// Dense handle of a vertex. Never reused within one graph's lifetime.
struct VertexId {
  std::uint32_t value = std::numeric_limits<std::uint32_t>::max();

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t v) : value(v) {}

  constexpr bool valid() const { return value != std::numeric_limits<std::uint32_t>::max(); }
  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// Dense handle of a black edge. Parallel edges have distinct ids.
struct EdgeId {
  std::uint32_t value = std::numeric_limits<std::uint32_t>::max();

  constexpr EdgeId() = default;
  constexpr explicit EdgeId(std::uint32_t v) : value(v) {}

  constexpr bool valid() const { return value != std::numeric_limits<std::uint32_t>::max(); }
  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

inline std::ostream& operator<<(std::ostream& os, VertexId v) { return os << v.value; }
inline std::ostream& operator<<(std::ostream& os, EdgeId e) { return os << 'e' << e.value; }

/// Unordered vertex pair, stored normalized (first <= second).
struct VertexPair {
  VertexId first;
  VertexId second;

  constexpr VertexPair() = default;
  constexpr VertexPair(VertexId a, VertexId b)
      : first(a < b ? a : b), second(a < b ? b : a) {}

  constexpr bool is_loop() const { return first == second; }
  constexpr bool contains(VertexId v) const { return first == v || second == v; }
  constexpr VertexId other(VertexId v) const { return first == v ? second : first; }

  friend constexpr auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const VertexPair& p) {
  return os << '(' << p.first.value << ',' << p.second.value << ')';
}

}  // namespace hyperell

template <>
struct std::hash<hyperell::VertexId> {
  std::size_t operator()(hyperell::VertexId v) const noexcept { return std::hash<std::uint32_t>{}(v.value); }
};

template <>
struct std::hash<hyperell::EdgeId> {
  std::size_t operator()(hyperell::EdgeId e) const noexcept { return std::hash<std::uint32_t>{}(e.value); }
};

template <>
struct std::hash<hyperell::VertexPair> {
  std::size_t operator()(const hyperell::VertexPair& p) const noexcept {
    return (static_cast<std::size_t>(p.first.value) << 32) ^ p.second.value;
  }
};

#endif  // HYPERELL_IDS_HPP
