#pragma once

#include <iosfwd>
#include <string>

#include "lfg/graph.hpp"

namespace lfg::graph {

/// Text format:
///   p graph <n>
///   v <i> <label>     (optional; default label of vertex i is "i")
///   e <i> <j>
/// Indices are 0-based; '#' starts a comment. Throws ParseError.
Graph read_graph(std::istream &in);
Graph read_graph_file(const std::string &path);
Graph parse_graph(const std::string &text);

/// Writes `v` lines only for labels that differ from the default.
void write_graph(std::ostream &out, const Graph &g);
std::string format_graph(const Graph &g);

} // namespace lfg::graph
