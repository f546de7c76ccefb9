// graph6, edge-list and DOT formats.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pdom/graph.hpp"

namespace pdom {

/// Malformed input. line() is 1-based (0 when not line oriented);
/// column() is the 1-based byte offset inside the line or string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Decodes one graph6 string. An optional ">>graph6<<" prefix and a
/// trailing newline are accepted.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

/// One graph6 string per non-empty line.
std::vector<Graph> parse_graph6_lines(const std::string& text);

/// Lines of "u v" (0-indexed). An optional first line "n <order>" fixes the
/// order so isolated vertices survive; otherwise the order is max index + 1.
/// Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(const std::string& text);

/// Undirected DOT. Vertices in `highlight` are drawn as filled boxes.
std::string write_dot(const Graph& g, VertexSet highlight = {});

}  // namespace pdom
