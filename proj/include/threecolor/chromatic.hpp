#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "threecolor/graph.hpp"
#include "threecolor/reduce.hpp"

namespace threecolor {

/// Rooted height-two tree: three children, at most five grandchildren, at
/// most two per child; every edge is an edge of the working subgraph.
struct ChromaticTree {
    VertexId root = 0;
    std::array<VertexId, 3> children{};
    std::array<std::vector<VertexId>, 3> grandchildren;

    std::size_t grandchild_count() const;
    std::vector<VertexId> members() const;  // root + children + grandchildren
};

/// A closed ten-vertex structure (one tree plus six candidate grandchildren
/// forming a single cycle, no other subgraph neighbors) that cannot be
/// rewritten. It is detached and colored during reconstruction from the
/// colors of its few boundary vertices; `rule` maps each boundary coloring
/// that admits an extension to one.
struct TrivialConfig {
    std::vector<VertexId> members;   // ascending
    std::vector<VertexId> boundary;  // ascending
    std::map<std::vector<Color>, Coloring> rule;
};

struct ChromaticForest {
    std::vector<ChromaticTree> trees;
    std::vector<TrivialConfig> trivially_colored;
    std::set<VertexId> covered;  // tree members + grandchildren + config members
};

/// How to enumerate a tree's cheap color assignments.
struct EnumerationSchedule {
    enum class Kind {
        RootBranch,     // three assignments over the root
        TwoChildBranch  // nine assignments over the two two-grandchild children
    };
    Kind kind = Kind::RootBranch;
    // TwoChildBranch only: indices of the children carrying two
    // grandchildren each.
    std::array<std::size_t, 2> branch_children{};
};

/// Maximal forest of claws in gs at the one-for-two improvement fixpoint:
/// no vertex with three uncovered neighbors remains, and no single tree can
/// be removed in favor of two disjoint new ones rooted in or next to it.
std::vector<ChromaticTree> build_k13_forest(const Graph& gs);

/// Attach every admissible uncovered vertex to an adjacent tree, keeping at
/// most five grandchildren per tree and two per child. Trees whose candidate
/// weight exceeds five are replaced by two trees where possible; the single
/// irreducible closed configuration is moved to trivially_colored together
/// with a coloring rule precomputed from the full graph g.
ChromaticForest assign_grandchildren(const Graph& g, const Graph& gs,
                                     std::vector<ChromaticTree> forest,
                                     const std::set<VertexId>& admissible);

/// Four or fewer grandchildren: enumerate the root (children then have a
/// colored neighbor, grandchildren go to the CSP). Exactly five: enumerate
/// the two children with two grandchildren; equal colors leave the root
/// two-colored, unequal colors force it to the third color.
EnumerationSchedule schedule(const ChromaticTree& tree);

}  // namespace threecolor
