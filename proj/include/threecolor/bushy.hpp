#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "threecolor/graph.hpp"

namespace threecolor {

/// One tree of a bushy forest. Every internal vertex is adjacent (through
/// tree edges) to at least four tree vertices; leaves hang off internals.
struct BushyTree {
    VertexId root = 0;
    std::set<VertexId> internal;  // includes root
    std::set<VertexId> leaves;
    std::map<VertexId, VertexId> parent;  // for every vertex except the root
};

struct BushyForest {
    std::vector<BushyTree> trees;

    bool contains(VertexId v) const;
    bool is_internal(VertexId v) const;
    /// Index of the tree containing v, or nullopt.
    std::optional<std::size_t> tree_of(VertexId v) const;
    std::set<VertexId> all_vertices() const;
    std::size_t internal_count() const;
};

/// Vertex classification relative to a maximal low-magnitude bushy forest.
/// High-magnitude vertices (three neighbors outside the forest) land in
/// n3[i] where i is the largest number of high-magnitude vertices adjacent
/// to any one tree adjacent to them. Forest neighbors fitting no named class
/// (degree >= 4 with a single leaf neighbor) are kept in n_other.
struct Partition {
    std::set<VertexId> roots;
    std::set<VertexId> internal;  // non-root internals
    std::set<VertexId> leaves;
    std::set<VertexId> n1;
    std::set<VertexId> n2;
    std::array<std::set<VertexId>, 9> n3;  // index 1..8 used
    std::set<VertexId> n_other;
    std::array<std::set<VertexId>, 8> u_by_n1;  // index j: component holds j N1 vertices
    std::set<VertexId> u_prime;

    std::set<VertexId> n3_all() const;
    std::set<VertexId> n_all() const;
    std::set<VertexId> u_all() const;
};

/// Greedy maximal bushy forest: grow trees by internalizing leaves with
/// three or more outside neighbors, absorb outside vertices adjacent to an
/// internal vertex as leaves, and seed new trees at outside vertices with
/// four or more outside neighbors; smallest witness first. Requires minimum
/// degree three.
BushyForest build_maximal_bushy_forest(const Graph& g);

/// Empty iff the three maximality clauses hold: no outside vertex with four
/// outside neighbors, no leaf with three outside neighbors, no outside
/// vertex adjacent to an internal vertex. Violations name clause + witness.
std::vector<std::string> check_maximal(const Graph& g, const BushyForest& f);

/// Rewrite a maximal bushy forest until every adjacent high-magnitude
/// vertex sees only one-internal four-leaf trees and same-tree
/// high-magnitude pairs share a common neighbor (a leaf of that tree or an
/// outside vertex). Four rewrite cases, lowest-numbered case at the
/// smallest witness, re-maximalizing after each:
///   1. high-magnitude vertex on a multi-internal tree: split the tree into
///      one rooted at an internal vertex away from the touched leaf and one
///      rooted at the high-magnitude vertex;
///   2. high-magnitude vertex on a one-internal tree with five or more
///      leaves: detach the touched leaf into a new tree rooted at the
///      high-magnitude vertex;
///   3. two non-adjacent high-magnitude vertices on distinct leaves with no
///      common neighbor: replace the tree by trees rooted at both;
///   4. as 3 but the pair is adjacent: one new tree with both as internals.
/// Each rewrite raises (tree count, internal count) lexicographically, so
/// the loop ends after at most n^2 rewrites.
BushyForest to_low_magnitude(const Graph& g, BushyForest f);

/// Empty iff the low-magnitude conditions hold for every high-magnitude
/// vertex and pair.
std::vector<std::string> check_low_magnitude(const Graph& g, const BushyForest& f);

/// High-magnitude vertices: outside vertices adjacent to the forest with
/// exactly three neighbors outside it.
std::set<VertexId> high_magnitude_vertices(const Graph& g, const BushyForest& f);

/// Classify every vertex relative to a maximal low-magnitude bushy forest
/// and verify the four counting constraints the classification must obey;
/// throws std::logic_error naming the first failed constraint (they are
/// theorems under the pipeline preconditions, so failure means a bug).
Partition partition(const Graph& g, const BushyForest& f);

/// The four counting constraints, exposed for diagnostics: empty when all
/// hold.
std::vector<std::string> check_partition_constraints(const Partition& p);

}  // namespace threecolor
