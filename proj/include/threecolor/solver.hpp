#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "threecolor/bushy.hpp"
#include "threecolor/graph.hpp"
#include "threecolor/reduce.hpp"

namespace threecolor {

struct SolveOptions {
    bool exhaustive = false;  // keep enumerating after the first solution
    int jobs = 1;             // worker threads over the assignment space
};

struct SearchStats {
    std::uint64_t branch_nodes = 0;
    std::uint64_t csp_calls = 0;
    std::uint64_t enumerated_assignments = 0;
    double wall_ms = 0.0;
    // Cardinalities of the most recent forest-stage partition.
    std::map<std::string, std::uint64_t> partition_counts;
};

struct SolveResult {
    bool colorable = false;
    std::optional<Coloring> coloring;  // over the original vertices when colorable
    SearchStats stats;
};

/// Decide 3-colorability of any finite simple graph. Components are solved
/// independently; each runs low-degree elimination, branching on
/// degree-three cycles and oversized degree-three components, then the
/// forest stage: maximal low-magnitude bushy forest, high-magnitude
/// chromatic forest, enumeration of internal-vertex and schedule
/// assignments, and the CSP on what remains. Returned colorings always
/// verify against the input graph.
SolveResult solve_3coloring(const Graph& g, const SolveOptions& options = {});

/// Exact baseline by backtracking over all assignments (first vertex pinned
/// to one color). Refuses graphs above the cap.
bool brute_force(const Graph& g, std::size_t cap = 20);

/// nullopt when every edge is bichromatic, otherwise a witness edge.
/// The coloring must be total on the graph's vertices.
std::optional<std::pair<VertexId, VertexId>> verify_coloring(const Graph& g,
                                                             const Coloring& coloring);

/// Partition cardinalities keyed for stats output (R, I, L, N1, N2, N3_1..8,
/// N_other, U0..U7, Uprime).
std::map<std::string, std::uint64_t> partition_counts(const Partition& p);

}  // namespace threecolor
