#pragma once

#include <iosfwd>
#include <string>

#include "isokit/graph.hpp"

namespace isokit {

// Edge-list text format:
//   first data line "n m", then m lines "u v" with 0 <= u < v < n,
//   ASCII decimal, newline-terminated. Lines starting with '#' are comments.

Graph read_edge_list(std::istream& in, const std::string& source_name = "<input>");
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace isokit
