#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nearlyz/graph.hpp"

namespace nearlyz {

/// Malformed textual input. offset() is the byte position inside the record
/// (or inside the whole text for edge lists) where parsing stopped.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Decodes one graph6 record (short form, n <= 62). An optional ">>graph6<<"
/// header and a trailing newline are accepted.
Graph parse_graph6(std::string_view text);

/// Throws GraphError when g.order() > 62.
std::string to_graph6(const Graph &g);

/// One record per non-empty line, in order.
std::vector<Graph> parse_graph6_stream(std::istream &in);

/// "n" on the first line followed by "a b" lines. Several graphs may be given
/// separated by blank lines.
std::vector<Graph> parse_edge_list(std::string_view text);

} // namespace nearlyz
