#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "threecolor/graph.hpp"

namespace threecolor {

/// Erdos-Renyi graph on n vertices, each edge present with probability p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Random graph post-processed to minimum degree three by adding edges from
/// deficient vertices to random non-neighbors. Requires n >= 4.
Graph random_min_degree_3(std::size_t n, double p, std::uint64_t seed);

/// Family of t copies of the hardest single-tree neighborhood the runtime
/// analysis predicts: per copy one root with four leaves, six high-magnitude
/// vertices all loading the same tree, two vertices whose neighbors are all
/// high-magnitude, and a padding block keeping minimum degree three with
/// every degree-three component an acyclic piece of at most seven vertices.
/// Consecutive copies are chained through the padding block.
Graph worst_case_family(std::size_t t);

/// Built-in small named example graphs: fig1-left, fig1-right, fig2, fig3,
/// fig8, fig10. Unknown names raise std::invalid_argument.
Graph figure_fixture(const std::string& name);
std::vector<std::string> figure_fixture_names();

}  // namespace threecolor
