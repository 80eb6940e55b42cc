#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "graphmodel/hom.hpp"

namespace graphmodel {

/// Graph files: a line `n <count>`, then `e <u> <v>` lines. `#` starts a
/// comment line; blank lines are ignored. Throws ParseError with the line
/// number, or InvalidInput for out-of-range endpoints.
Graph parse_graph(std::string_view text);
Graph parse_graph_file(const std::string& path);

/// Morphism files: one line `m <v0> ... <v_{n-1}>`. The map is validated
/// against dom and cod; a non-edge image is reported with the offending edge.
Hom parse_hom(std::string_view text, const GraphPtr& dom, const GraphPtr& cod);
Hom parse_hom_file(const std::string& path, const GraphPtr& dom, const GraphPtr& cod);

/// `n <count>` followed by the sorted edge lines.
std::string print_graph(const Graph& g);
/// `m <v0> ... <v_{n-1}>`, newline-terminated.
std::string print_hom(const Hom& f);

/// Compact one-token name of a labelled graph, e.g. `3:0-1,1-2` or `1:0-0`.
std::string digest(const Graph& g);
/// "digest -> digest : m ..." on one line.
std::string describe(const Hom& f);

}  // namespace graphmodel
