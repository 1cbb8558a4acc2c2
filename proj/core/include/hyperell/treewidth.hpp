#ifndef HYPERELL_TREEWIDTH_HPP
#define HYPERELL_TREEWIDTH_HPP

#include "hyperell/multigraph.hpp"

namespace hyperell {

/// Treewidth of the underlying simple black graph is at most 2. Loops,
/// parallel edges and constraints are ignored.
bool tw_at_most_2(const Multigraph& g);

}  // namespace hyperell

#endif  // HYPERELL_TREEWIDTH_HPP
