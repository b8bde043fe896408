#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "threecolor/graph.hpp"

namespace threecolor {

using Color = std::uint8_t;
inline constexpr int kNumColors = 3;

using Coloring = std::map<VertexId, Color>;

// Trace steps. Replaying a trace in reverse extends a proper coloring of the
// reduced graph to a proper coloring of the graph before the step:
//  - RemovedLowDegree: the vertex had at most two neighbors when removed, so
//    a free color always exists among the three.
//  - Merged: the absorbed vertex takes the survivor's color.
//  - RemovedDominated: the vertex's neighborhood was a subset of a
//    non-adjacent vertex's, so it can take that vertex's color.
struct RemovedLowDegree {
    VertexId vertex;
    std::vector<VertexId> neighbors_at_removal;
};
struct Merged {
    MergeRecord record;
};
struct RemovedDominated {
    VertexId vertex;
    VertexId dominated_by;
};
using TraceStep = std::variant<RemovedLowDegree, Merged, RemovedDominated>;

/// A graph under reduction plus everything needed to turn a coloring of the
/// residual graph back into a coloring of the original: the trace, and any
/// colors fixed from outside (used when enumerating forest assignments).
struct Instance {
    Graph graph;
    std::vector<TraceStep> trace;
    Coloring fixed;
};

/// Remove vertices of degree two or less, smallest id first, until the
/// residual graph has minimum degree three or is empty.
void eliminate_low_degree(Instance& inst);

/// A vertex to branch on, or nullopt when no degree-three component contains
/// a cycle or nine or more vertices. Requires minimum degree three.
/// Within the first qualifying component (ordered by smallest id): a cycle
/// vertex if the component is cyclic, otherwise a vertex with three
/// neighbors inside the component, otherwise the path median.
std::optional<VertexId> find_branch_target(const Instance& inst);

/// Branch on a degree-three vertex: its neighbors cannot use three distinct
/// colors, so some pair shares one. One child per non-adjacent neighbor
/// pair, in (min id, max id) order: merge the pair, drop v (now degree two),
/// and run the low-degree cascade. Adjacent pairs produce no child. The
/// instance is 3-colorable iff some child is.
std::vector<Instance> branch_on(const Instance& inst, VertexId v);

/// Extend a proper coloring of the residual graph through the trace,
/// newest step first. Throws std::logic_error if no free color exists,
/// which indicates a corrupted trace, not an input condition.
Coloring replay(const std::vector<TraceStep>& trace, const Coloring& residual);

}  // namespace threecolor
