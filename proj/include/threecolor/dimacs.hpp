#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "threecolor/graph.hpp"
#include "threecolor/reduce.hpp"

namespace threecolor {

struct DimacsError : std::runtime_error {
    DimacsError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

/// A parsed .col file. Vertex labels are 1-based in the file and map to ids
/// 0..n-1; the declared edge count may disagree with the deduplicated one
/// (flagged, not fatal).
struct DimacsGraph {
    std::size_t declared_vertices = 0;
    std::size_t declared_edges = 0;
    bool edge_count_mismatch = false;
    Graph graph;
};

/// Parse `c` comments, one `p edge <n> <m>` header, and `e <u> <v>` lines.
/// Malformed input, labels outside [1, n] and self loops raise DimacsError
/// with the offending line number.
DimacsGraph parse_dimacs(const std::string& text);

std::string write_dimacs(const Graph& g);

/// Coloring file: one `<label> <color>` line per vertex, labels 1-based.
std::string write_coloring(const Graph& g, const Coloring& coloring);
Coloring parse_coloring(const std::string& text, const Graph& g);

}  // namespace threecolor
