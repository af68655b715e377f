#pragma once

#include <string>
#include <string_view>

#include "deltacvx/graph.hpp"

namespace deltacvx {

enum class GraphFormat { Auto, EdgeList, Graph6 };

/// Edge list: a header line "n m" followed by m lines "u v" (0 <= u,v < n).
/// Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

/// Standard graph6 (optionally prefixed by ">>graph6<<"); n < 258048.
Graph parse_graph6(std::string_view text);

/// Auto picks graph6 when the trimmed text is a single token made of
/// printable graph6 characters, edge list otherwise.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g);

}  // namespace deltacvx
