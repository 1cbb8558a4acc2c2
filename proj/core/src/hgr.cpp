#include "hyperell/hgr.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace hyperell {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t number(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Multigraph parse_hgr(std::string_view text, std::vector<std::string>* warnings) {
  Multigraph g;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t edges_seen = 0;
  std::set<std::pair<std::size_t, std::size_t>> seen_constraints;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 3 || tok[0] != "hgr") throw ParseError(lineno, "expected header 'hgr <n> <m>'");
      n = number(tok[1], lineno);
      m = number(tok[2], lineno);
      if (n > 0xfffffff0u) throw ParseError(lineno, "vertex count too large");
      g = Multigraph(n);
      have_header = true;
      continue;
    }
    if (tok.size() != 3 || (tok[0] != "e" && tok[0] != "c")) {
      throw ParseError(lineno, "expected 'e <u> <v>' or 'c <u> <v>'");
    }
    const std::size_t u = number(tok[1], lineno);
    const std::size_t v = number(tok[2], lineno);
    if (u >= n || v >= n) throw ParseError(lineno, "vertex id out of range");
    const VertexId a(static_cast<std::uint32_t>(u));
    const VertexId b(static_cast<std::uint32_t>(v));
    if (tok[0] == "e") {
      if (edges_seen == m) throw ParseError(lineno, "more edge lines than the header declares");
      g.add_edge(a, b);
      ++edges_seen;
    } else if (!seen_constraints.emplace(std::min(u, v), std::max(u, v)).second) {
      if (warnings) warnings->push_back("line " + std::to_string(lineno) + ": duplicate constraint ignored");
    } else {
      g.add_constraint(a, b);
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header 'hgr <n> <m>'");
  if (edges_seen != m) {
    throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges_seen));
  }
  return g;
}

std::string print_hgr(const Multigraph& g) {
  const auto vs = g.vertices();
  std::vector<std::uint32_t> label(g.vertex_id_bound(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) label[vs[i].index()] = static_cast<std::uint32_t>(i);
  std::ostringstream os;
  os << "hgr " << vs.size() << ' ' << g.num_edges() << '\n';
  for (EdgeId e : g.edges()) {
    const auto [a, b] = g.endpoints(e);
    os << "e " << label[a.index()] << ' ' << label[b.index()] << '\n';
  }
  for (const VertexPair& p : g.constraints()) {
    os << "c " << label[p.first.index()] << ' ' << label[p.second.index()] << '\n';
  }
  return os.str();
}

}  // namespace hyperell
