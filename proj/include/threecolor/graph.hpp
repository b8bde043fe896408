#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace threecolor {

using VertexId = std::uint32_t;

/// Records a pair merge: `absorbed` was folded into `survivor` and no longer
/// exists in the graph. Ids are never reused, so the record stays unambiguous
/// for the lifetime of a solve.
struct MergeRecord {
    VertexId survivor;
    VertexId absorbed;
};

/// Undirected simple graph with stable vertex ids. Value type: copy it to
/// branch; instances never share state.
class Graph {
public:
    Graph() = default;

    /// Graph with vertices 0..n-1 and no edges.
    static Graph with_vertices(std::size_t n);

    void add_vertex(VertexId v);
    void add_edge(VertexId u, VertexId v);

    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    std::size_t degree(VertexId v) const;
    /// Neighbors in ascending id order.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    /// All vertex ids in ascending order.
    std::vector<VertexId> vertices() const;
    VertexId min_vertex() const;

    void remove_vertex(VertexId v);

    /// Merge two distinct non-adjacent vertices; the smaller id survives and
    /// inherits the union of both neighborhoods. Returns nullopt (and leaves
    /// the graph untouched) when the pair is adjacent: assigning both the
    /// same color is contradictory, so the enclosing branch is infeasible.
    std::optional<MergeRecord> merge_vertices(VertexId u, VertexId v);

    /// Throws std::logic_error if the adjacency structure is corrupt
    /// (asymmetric, self loops, duplicates, unknown endpoints).
    void check_consistency() const;

    bool operator==(const Graph&) const = default;

private:
    std::map<VertexId, std::vector<VertexId>> adj_;
    std::size_t edge_count_ = 0;
};

/// Connected components of the subgraph induced by vertices satisfying
/// `pred`, ordered by smallest contained id; each component ascending.
std::vector<std::vector<VertexId>> components_where(
    const Graph& g, const std::function<bool(VertexId)>& pred);

/// Subgraph on `s` with exactly the edges of g inside s.
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& s);

}  // namespace threecolor
