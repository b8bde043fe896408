#include "threecolor/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace threecolor {

namespace {

bool sorted_contains(const std::vector<VertexId>& xs, VertexId v) {
    return std::binary_search(xs.begin(), xs.end(), v);
}

void sorted_insert(std::vector<VertexId>& xs, VertexId v) {
    auto it = std::lower_bound(xs.begin(), xs.end(), v);
    if (it == xs.end() || *it != v) xs.insert(it, v);
}

void sorted_erase(std::vector<VertexId>& xs, VertexId v) {
    auto it = std::lower_bound(xs.begin(), xs.end(), v);
    if (it != xs.end() && *it == v) xs.erase(it);
}

}  // namespace

Graph Graph::with_vertices(std::size_t n) {
    Graph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex(static_cast<VertexId>(i));
    return g;
}

void Graph::add_vertex(VertexId v) {
    adj_.try_emplace(v);
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("self loop on vertex " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v))
        throw std::invalid_argument("edge endpoint not in graph");
    if (has_edge(u, v)) return;
    sorted_insert(adj_[u], v);
    sorted_insert(adj_[v], u);
    ++edge_count_;
}

bool Graph::has_vertex(VertexId v) const {
    return adj_.count(v) != 0;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && sorted_contains(it->second, v);
}

std::size_t Graph::degree(VertexId v) const {
    return neighbors(v).size();
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
}

VertexId Graph::min_vertex() const {
    if (adj_.empty()) throw std::logic_error("min_vertex on empty graph");
    return adj_.begin()->first;
}

void Graph::remove_vertex(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    for (VertexId u : it->second) {
        sorted_erase(adj_[u], v);
        --edge_count_;
    }
    adj_.erase(it);
}

std::optional<MergeRecord> Graph::merge_vertices(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("merge of a vertex with itself");
    if (!has_vertex(u) || !has_vertex(v))
        throw std::invalid_argument("merge endpoint not in graph");
    if (has_edge(u, v)) return std::nullopt;

    const VertexId survivor = std::min(u, v);
    const VertexId absorbed = std::max(u, v);
    // Reroute absorbed's edges to the survivor, deduplicating.
    std::vector<VertexId> absorbed_nbrs = adj_[absorbed];
    remove_vertex(absorbed);
    for (VertexId w : absorbed_nbrs) add_edge(survivor, w);
    return MergeRecord{survivor, absorbed};
}

void Graph::check_consistency() const {
    std::size_t endpoint_count = 0;
    for (const auto& [v, nbrs] : adj_) {
        if (!std::is_sorted(nbrs.begin(), nbrs.end()))
            throw std::logic_error("adjacency list not sorted");
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::logic_error("duplicate edge");
        for (VertexId u : nbrs) {
            if (u == v) throw std::logic_error("self loop");
            auto it = adj_.find(u);
            if (it == adj_.end()) throw std::logic_error("edge to unknown vertex");
            if (!sorted_contains(it->second, v))
                throw std::logic_error("asymmetric adjacency");
        }
        endpoint_count += nbrs.size();
    }
    if (endpoint_count != 2 * edge_count_)
        throw std::logic_error("edge count out of sync");
}

std::vector<std::vector<VertexId>> components_where(
    const Graph& g, const std::function<bool(VertexId)>& pred) {
    std::set<VertexId> pending;
    for (VertexId v : g.vertices())
        if (pred(v)) pending.insert(v);

    std::vector<std::vector<VertexId>> comps;
    while (!pending.empty()) {
        VertexId start = *pending.begin();
        std::vector<VertexId> stack{start};
        std::set<VertexId> comp{start};
        pending.erase(start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.neighbors(v)) {
                if (pending.erase(u)) {
                    comp.insert(u);
                    stack.push_back(u);
                }
            }
        }
        comps.emplace_back(comp.begin(), comp.end());
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& s) {
    Graph out;
    for (VertexId v : s) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced set not in graph");
        out.add_vertex(v);
    }
    for (VertexId v : s)
        for (VertexId u : g.neighbors(v))
            if (u > v && out.has_vertex(u)) out.add_edge(v, u);
    return out;
}

}  // namespace threecolor
