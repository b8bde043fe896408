#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "threecolor/csp.hpp"
#include "threecolor/graph.hpp"

namespace threecolor::testing {

inline Graph graph_from_edges(std::size_t n,
                              const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g = Graph::with_vertices(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph complete_graph(std::size_t n) {
    Graph g = Graph::with_vertices(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    Graph g = Graph::with_vertices(n);
    for (VertexId v = 0; v < n; ++v) g.add_edge(v, static_cast<VertexId>((v + 1) % n));
    return g;
}

inline Graph path_graph(std::size_t n) {
    Graph g = Graph::with_vertices(n);
    for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph petersen_graph() {
    return graph_from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                 {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                 {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// Exhaustive satisfiability check over the product of the live domains;
// independent of the solver's elimination and branching.
inline bool csp_oracle_sat(const CspInstance& csp) {
    if (csp.unsat()) return false;
    std::vector<VarId> vars;
    std::vector<std::vector<Color>> choices;
    for (const auto& [v, mask] : csp.domains()) {
        vars.push_back(v);
        std::vector<Color> cs;
        for (Color c = 0; c < kNumColors; ++c)
            if ((mask >> c) & 1) cs.push_back(c);
        choices.push_back(cs);
    }
    std::vector<std::size_t> pick(vars.size(), 0);
    auto conflicts_ok = [&]() {
        std::map<VarId, Color> a;
        for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = choices[i][pick[i]];
        for (const auto& [p, q] : csp.conflicts())
            if (a.at(p.var) == p.color && a.at(q.var) == q.color) return false;
        return true;
    };
    for (;;) {
        if (conflicts_ok()) return true;
        std::size_t i = 0;
        while (i < pick.size() && pick[i] + 1 == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) return false;
        ++pick[i];
    }
}

inline bool csp_solution_ok(const CspInstance& original, const CspSolution& sol) {
    for (const auto& [v, mask] : original.domains()) {
        auto it = sol.assignment.find(v);
        if (it == sol.assignment.end()) return false;
        if (!((mask >> it->second) & 1)) return false;
    }
    for (const auto& [p, q] : original.conflicts())
        if (sol.assignment.at(p.var) == p.color && sol.assignment.at(q.var) == q.color)
            return false;
    return true;
}

inline CspInstance random_csp(std::size_t vars, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CspInstance csp;
    for (VarId v = 0; v < vars; ++v) {
        std::uint8_t mask = static_cast<std::uint8_t>(1 + rng() % 7);
        csp.add_variable(v, mask);
    }
    std::size_t conflicts = 1 + rng() % (3 * vars);
    for (std::size_t k = 0; k < conflicts; ++k) {
        VarId a = static_cast<VarId>(rng() % vars);
        VarId b = static_cast<VarId>(rng() % vars);
        if (a == b) continue;
        csp.add_conflict({a, static_cast<Color>(rng() % 3)},
                         {b, static_cast<Color>(rng() % 3)});
    }
    return csp;
}

}  // namespace threecolor::testing
