#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "cdcrit/graph.hpp"

namespace cdcrit {

std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and trailing newline.
Graph from_graph6(std::string_view s);
// One graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace cdcrit
