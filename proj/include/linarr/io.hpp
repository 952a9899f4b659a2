#pragma once

#include <iosfwd>
#include <string>

#include "linarr/graph.hpp"

namespace linarr {

enum class GraphFormat { EdgeList, Dimacs };

// Two accepted formats, auto-detected by the first significant line:
//   edge list:  "n m" header, then m lines "u v"
//   DIMACS-like: "p edge n m" header, then m lines "e u v"
// Lines starting with '#' or 'c' and blank lines are ignored. Errors carry
// 1-based line numbers of the offending input line.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph parse_graph_file(const std::string& path);

std::string format_graph(const Graph& g, GraphFormat format = GraphFormat::EdgeList);

}  // namespace linarr
