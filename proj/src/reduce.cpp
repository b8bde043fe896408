#include "threecolor/reduce.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace threecolor {

void eliminate_low_degree(Instance& inst) {
    Graph& g = inst.graph;
    for (;;) {
        std::optional<VertexId> pick;
        for (VertexId v : g.vertices()) {
            if (g.degree(v) <= 2) {
                pick = v;
                break;
            }
        }
        if (!pick) return;
        inst.trace.push_back(RemovedLowDegree{*pick, g.neighbors(*pick)});
        g.remove_vertex(*pick);
    }
}

namespace {

// Vertices of the component that lie on some cycle: iteratively strip
// component-degree-<=1 vertices; whatever remains is the 2-core.
std::vector<VertexId> two_core(const Graph& g, const std::vector<VertexId>& comp) {
    std::set<VertexId> alive(comp.begin(), comp.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = alive.begin(); it != alive.end();) {
            std::size_t d = 0;
            for (VertexId u : g.neighbors(*it)) d += alive.count(u);
            if (d <= 1) {
                it = alive.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    return {alive.begin(), alive.end()};
}

std::size_t component_degree(const Graph& g, const std::set<VertexId>& comp, VertexId v) {
    std::size_t d = 0;
    for (VertexId u : g.neighbors(v)) d += comp.count(u);
    return d;
}

VertexId path_median(const Graph& g, const std::vector<VertexId>& comp_sorted) {
    std::set<VertexId> comp(comp_sorted.begin(), comp_sorted.end());
    // Endpoints have exactly one neighbor inside the component.
    VertexId endpoint = 0;
    bool found = false;
    for (VertexId v : comp_sorted) {
        if (component_degree(g, comp, v) == 1) {
            endpoint = v;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("path component without endpoint");

    std::vector<VertexId> order{endpoint};
    std::set<VertexId> seen{endpoint};
    while (order.size() < comp_sorted.size()) {
        VertexId cur = order.back();
        bool advanced = false;
        for (VertexId u : g.neighbors(cur)) {
            if (comp.count(u) && !seen.count(u)) {
                order.push_back(u);
                seen.insert(u);
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("component is not a path");
    }
    const std::size_t n = order.size();
    if (n % 2 == 1) return order[n / 2];
    // Even length: the two central vertices tie; take the smaller id.
    return std::min(order[n / 2 - 1], order[n / 2]);
}

}  // namespace

std::optional<VertexId> find_branch_target(const Instance& inst) {
    const Graph& g = inst.graph;
    auto comps = components_where(g, [&](VertexId v) { return g.degree(v) == 3; });
    for (const auto& comp : comps) {
        std::set<VertexId> comp_set(comp.begin(), comp.end());
        std::size_t internal_edges = 0;
        for (VertexId v : comp) internal_edges += component_degree(g, comp_set, v);
        internal_edges /= 2;
        if (internal_edges >= comp.size()) {
            // Connected with as many edges as vertices: contains a cycle.
            auto core = two_core(g, comp);
            return *std::min_element(core.begin(), core.end());
        }
        if (comp.size() >= 9) {
            for (VertexId v : comp)
                if (component_degree(g, comp_set, v) == 3) return v;
            return path_median(g, comp);
        }
    }
    return std::nullopt;
}

std::vector<Instance> branch_on(const Instance& inst, VertexId v) {
    const auto& nbrs = inst.graph.neighbors(v);
    if (nbrs.size() != 3)
        throw std::invalid_argument("branch vertex must have exactly three neighbors");
    const std::array<std::pair<VertexId, VertexId>, 3> pairs{{
        {nbrs[0], nbrs[1]},
        {nbrs[0], nbrs[2]},
        {nbrs[1], nbrs[2]},
    }};
    std::vector<Instance> children;
    for (auto [a, b] : pairs) {
        Instance child = inst;
        auto rec = child.graph.merge_vertices(a, b);
        if (!rec) continue;  // adjacent pair: infeasible branch
        child.trace.push_back(Merged{*rec});
        child.trace.push_back(RemovedLowDegree{v, child.graph.neighbors(v)});
        child.graph.remove_vertex(v);
        eliminate_low_degree(child);
        children.push_back(std::move(child));
    }
    return children;
}

Coloring replay(const std::vector<TraceStep>& trace, const Coloring& residual) {
    Coloring coloring = residual;
    auto color_of = [&](VertexId v) -> Color {
        auto it = coloring.find(v);
        if (it == coloring.end())
            throw std::logic_error("trace references uncolored vertex");
        return it->second;
    };
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        if (const auto* low = std::get_if<RemovedLowDegree>(&*it)) {
            std::array<bool, kNumColors> used{};
            for (VertexId u : low->neighbors_at_removal) used[color_of(u)] = true;
            Color c = 0;
            while (c < kNumColors && used[c]) ++c;
            if (c == kNumColors)
                throw std::logic_error("no free color during replay");
            coloring[low->vertex] = c;
        } else if (const auto* merged = std::get_if<Merged>(&*it)) {
            coloring[merged->record.absorbed] = color_of(merged->record.survivor);
        } else {
            const auto& dom = std::get<RemovedDominated>(*it);
            coloring[dom.vertex] = color_of(dom.dominated_by);
        }
    }
    return coloring;
}

}  // namespace threecolor
