#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sqturan/graph.hpp"

namespace sqturan {

/// Standard graph6 encoding (no header, no trailing newline).
std::string to_graph6(const Graph& g);
/// Parses one graph6 line. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted; anything else malformed throws IoError.
Graph from_graph6(std::string_view text);

/// Reads every non-empty, non-comment line of a graph6 file.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);
void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs);

/// DIMACS edge format: "p edge n m" then "e u v" lines, 1-indexed; "c" lines are comments.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

Graph read_dimacs_file(const std::filesystem::path& path);

/// Loads a graph from a file, choosing DIMACS for *.dimacs / *.col / *.txt and graph6 otherwise.
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace sqturan
