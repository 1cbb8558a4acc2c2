#ifndef HYPERELL_HGR_HPP
#define HYPERELL_HGR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperell/multigraph.hpp"

namespace hyperell {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the hgr text format:
///   hgr <n> <m>
///   e <u> <v>     (exactly m lines; u == v is a loop)
///   c <u> <v>     (optional constraint lines)
/// `#` starts a comment. Duplicate constraint lines are dropped with a warning.
Multigraph parse_hgr(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Writes live vertices relabelled 0..n-1 in ascending id order.
std::string print_hgr(const Multigraph& g);

}  // namespace hyperell

#endif  // HYPERELL_HGR_HPP
