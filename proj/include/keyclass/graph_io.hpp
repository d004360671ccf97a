#pragma once

#include "keyclass/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace keyclass {

// Text interchange format:
//   kind: <inheritance|aggregation|interface|parameter|return|generic>
//   nodes:
//   <one fully-qualified name per line>
//   edges:
//   <src> -> <dst>
// Blank lines and lines starting with '#' are ignored. A "reverse-" prefix on
// the kind marks a transposed graph. The writer emits nodes and edges sorted,
// so read(write(g)) == g.
CouplingGraph parse_graph_text(std::string_view text, const std::string& origin = "");
std::string graph_to_text(const CouplingGraph& g);

CouplingGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const CouplingGraph& g, const std::filesystem::path& path);

// GraphViz mirror of the same content.
std::string graph_to_dot(const CouplingGraph& g);
void write_dot_file(const CouplingGraph& g, const std::filesystem::path& path);

} // namespace keyclass
