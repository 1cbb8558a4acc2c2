#include "hyperell/dot.hpp"

#include <sstream>

namespace hyperell {

std::string to_dot(const Multigraph& g, Flavor f, std::string_view title) {
  std::ostringstream os;
  os << "graph \"" << title << "\" {\n";
  for (VertexId v : g.vertices()) os << "  " << v.value << ";\n";
  for (EdgeId e : g.edges()) {
    const auto [a, b] = g.endpoints(e);
    os << "  " << a.value << " -- " << b.value << ";\n";
  }
  const char* color = f == Flavor::Sgon ? "green" : "red";
  for (const VertexPair& p : g.constraints()) {
    os << "  " << p.first.value << " -- " << p.second.value << " [style=dashed, color=" << color << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hyperell
