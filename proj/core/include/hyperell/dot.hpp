#ifndef HYPERELL_DOT_HPP
#define HYPERELL_DOT_HPP

#include <string>
#include <string_view>

#include "hyperell/multigraph.hpp"
#include "hyperell/rules.hpp"

namespace hyperell {

/// Graphviz rendering; constraints are dashed edges (green for sgon, red
/// otherwise).
std::string to_dot(const Multigraph& g, Flavor f, std::string_view title = "G");

}  // namespace hyperell

#endif  // HYPERELL_DOT_HPP
