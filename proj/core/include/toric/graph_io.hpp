#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "toric/graph.hpp"

namespace toric {

// Edge-list text format: one "label1 label2" pair per line, '#' starts a
// comment, blank lines are skipped. Vertex order is first appearance, edge
// order is line order. Malformed lines raise ParseError with the line number.
Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);

// An unreadable file raises FileError.
Graph read_graph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

}  // namespace toric
