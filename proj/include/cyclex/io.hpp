#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex::io {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge-list format v1: UTF-8, '#' starts a line comment, the first
/// significant line is `vertices: <name...>`, then one `u v` edge per line.
/// Duplicate edges and self-loops are hard parse errors.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Canonical writer: vertex names sorted, one edge per line with the
/// lexicographically smaller endpoint first, edges sorted. Writing what was
/// read back from a canonical file reproduces it byte for byte.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// Undirected DOT export with quoted names; the given edges (the heavy edges
/// of a construction) are styled bold.
void write_dot(std::ostream& out, const Graph& g,
               const std::vector<std::pair<std::string, std::string>>& bold_edges = {});
std::string to_dot(const Graph& g,
                   const std::vector<std::pair<std::string, std::string>>& bold_edges = {});

/// FNV-1a 64-bit over raw bytes; used to fingerprint input files in reports.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace cyclex::io
