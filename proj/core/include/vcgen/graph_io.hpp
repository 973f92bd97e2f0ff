#pragma once

#include <iosfwd>
#include <string>

#include "vcgen/graph.hpp"

namespace vcgen {

// Text format:
//   c <comment>
//   p vc <n> <m>
//   e <u> <v>        (m lines, 0-based)
//   k <budget>       (instances only)
Graph read_graph(std::istream& in);
Instance read_instance(std::istream& in);
Instance load_instance(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_instance(std::ostream& out, const Instance& inst);

}  // namespace vcgen
