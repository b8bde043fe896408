#include "threecolor/generate.hpp"

#include <random>
#include <stdexcept>

namespace threecolor {

namespace {

Graph from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g = Graph::with_vertices(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability out of range");
    std::mt19937_64 rng(seed);
    Graph g = Graph::with_vertices(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (unit_double(rng) < p) g.add_edge(u, v);
    return g;
}

Graph random_min_degree_3(std::size_t n, double p, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("need at least four vertices for minimum degree three");
    std::mt19937_64 rng(seed);
    Graph g = random_graph(n, p, seed);
    for (;;) {
        std::vector<VertexId> low;
        for (VertexId v : g.vertices())
            if (g.degree(v) < 3) low.push_back(v);
        if (low.empty()) return g;
        VertexId v = low[rng() % low.size()];
        std::vector<VertexId> options;
        for (VertexId u : g.vertices())
            if (u != v && !g.has_edge(u, v)) options.push_back(u);
        g.add_edge(v, options[rng() % options.size()]);
    }
}

Graph worst_case_family(std::size_t t) {
    if (t < 1) throw std::invalid_argument("family needs at least one copy");
    // Per copy (21 vertices): 0 root; 1..4 leaves; 5..10 high-magnitude
    // (two per leaf 1..3); 11,12 degree-three neighbors of leaf 4; 13,14
    // with all three neighbors high-magnitude; 15..20 shared-neighbor
    // padding completing every high-magnitude pair.
    constexpr std::size_t kCopy = 21;
    static const std::pair<VertexId, VertexId> local_edges[] = {
        {0, 1},  {0, 2},  {0, 3},  {0, 4},                      // tree
        {1, 5},  {1, 6},  {2, 7},  {2, 8},  {3, 9},  {3, 10},   // high magnitude
        {4, 11}, {4, 12},                                       // leaf-4 neighbors
        {5, 13}, {7, 13}, {9, 13}, {6, 14}, {8, 14}, {10, 14},  // all-HM vertices
        {5, 15}, {8, 15}, {5, 16}, {10, 16}, {6, 17}, {7, 17},  // pair padding
        {6, 18}, {9, 18}, {7, 19}, {10, 19}, {8, 20}, {9, 20},
        {18, 20},
    };
    Graph g = Graph::with_vertices(kCopy * t);
    for (std::size_t c = 0; c < t; ++c) {
        const VertexId base = static_cast<VertexId>(kCopy * c);
        const VertexId next = static_cast<VertexId>(kCopy * ((c + 1) % t));
        for (auto [u, v] : local_edges) g.add_edge(base + u, base + v);
        g.add_edge(base + 11, next + 15);
        g.add_edge(base + 11, next + 16);
        g.add_edge(base + 12, next + 17);
        g.add_edge(base + 12, next + 19);
    }
    return g;
}

Graph figure_fixture(const std::string& name) {
    if (name == "fig1-left") {
        // Triangular prism: 3-chromatic.
        return from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                              {0, 3}, {1, 4}, {2, 5}});
    }
    if (name == "fig1-right") {
        // Wheel over a five-cycle: needs four colors.
        return from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                              {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    }
    if (name == "fig2") {
        // Nine-vertex tree of degree-three vertices plus two hubs that keep
        // every tree vertex at degree exactly three.
        return from_edges(11, {{0, 1}, {1, 2},  {1, 3},  {0, 4},  {4, 5},
                               {0, 6}, {6, 7},  {6, 8},  {4, 9},  {2, 9},
                               {2, 10}, {3, 9}, {3, 10}, {5, 9},  {5, 10},
                               {7, 9}, {7, 10}, {8, 9},  {8, 10}});
    }
    if (name == "fig3") {
        return from_edges(
            20, {{0, 1},   {0, 2},   {0, 3},   {0, 4},   {1, 5},   {1, 6},  {1, 7},
                 {4, 5},   {2, 7},   {2, 8},   {2, 9},   {3, 9},   {3, 13}, {4, 13},
                 {4, 12},  {5, 15},  {5, 14},  {6, 14},  {6, 10},  {7, 10}, {7, 11},
                 {8, 11},  {12, 15}, {9, 16},  {8, 16},  {10, 17}, {11, 17},
                 {13, 18}, {12, 18}, {14, 19}, {15, 19}, {16, 17}, {18, 19}});
    }
    if (name == "fig8") {
        // A claw whose six outer vertices close into one six-cycle.
        return from_edges(10, {{0, 1}, {0, 2}, {0, 3}, {1, 6}, {1, 8}, {2, 4}, {2, 9},
                               {3, 5}, {3, 7}, {4, 5}, {5, 8}, {8, 9}, {9, 7}, {7, 6},
                               {6, 4}});
    }
    if (name == "fig10") {
        // fig8 plus three boundary vertices and their shared neighbor.
        return from_edges(14, {{0, 1},  {0, 2},  {0, 3},  {1, 6},   {1, 8},   {2, 4},
                               {2, 9},  {3, 5},  {3, 7},  {4, 5},   {5, 8},   {8, 9},
                               {9, 7},  {7, 6},  {6, 4},  {10, 9},  {10, 2},  {11, 5},
                               {11, 3}, {12, 6}, {12, 1}, {13, 10}, {13, 11}, {13, 12}});
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> figure_fixture_names() {
    return {"fig1-left", "fig1-right", "fig2", "fig3", "fig8", "fig10"};
}

}  // namespace threecolor
