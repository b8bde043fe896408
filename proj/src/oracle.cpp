#include <stdexcept>

#include "threecolor/solver.hpp"

namespace threecolor {

namespace {

bool extend(const Graph& g, const std::vector<VertexId>& order, Coloring& partial,
            std::size_t i) {
    if (i == order.size()) return true;
    VertexId v = order[i];
    const Color limit = (i == 0) ? 1 : kNumColors;  // first vertex pinned
    for (Color c = 0; c < limit; ++c) {
        bool ok = true;
        for (VertexId u : g.neighbors(v)) {
            auto it = partial.find(u);
            if (it != partial.end() && it->second == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        partial[v] = c;
        if (extend(g, order, partial, i + 1)) return true;
        partial.erase(v);
    }
    return false;
}

}  // namespace

bool brute_force(const Graph& g, std::size_t cap) {
    if (g.vertex_count() > cap)
        throw std::invalid_argument("graph exceeds the brute-force cap");
    std::vector<VertexId> order = g.vertices();
    Coloring partial;
    return extend(g, order, partial, 0);
}

std::optional<std::pair<VertexId, VertexId>> verify_coloring(const Graph& g,
                                                             const Coloring& coloring) {
    for (VertexId v : g.vertices()) {
        auto it = coloring.find(v);
        if (it == coloring.end())
            throw std::invalid_argument("coloring is not total on the graph");
        if (it->second >= kNumColors)
            throw std::invalid_argument("color out of range");
    }
    for (VertexId v : g.vertices())
        for (VertexId u : g.neighbors(v))
            if (u > v && coloring.at(v) == coloring.at(u)) return std::make_pair(v, u);
    return std::nullopt;
}

}  // namespace threecolor
