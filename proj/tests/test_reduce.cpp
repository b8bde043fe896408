#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "threecolor/generate.hpp"
#include "threecolor/reduce.hpp"
#include "threecolor/solver.hpp"

using namespace threecolor;
using namespace threecolor::testing;

namespace {

Instance make_instance(Graph g) {
    return Instance{std::move(g), {}, {}};
}

// Petersen with seven edges subdivided so the kept edges split the ten
// original degree-three vertices into acyclic pieces of six and four; each
// subdivision vertex is tied to two hubs, pushing it to degree four. The
// result has minimum degree three and no branchable degree-three structure.
Graph no_target_fixture() {
    Graph g = Graph::with_vertices(19);
    const std::vector<std::pair<VertexId, VertexId>> kept = {
        {0, 1}, {1, 2}, {0, 5}, {1, 6}, {2, 7}, {3, 4}, {3, 8}, {4, 9}};
    const std::vector<std::pair<VertexId, VertexId>> subdivided = {
        {2, 3}, {4, 0}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
    for (auto [u, v] : kept) g.add_edge(u, v);
    const VertexId hub1 = 17, hub2 = 18;
    VertexId s = 10;
    for (auto [u, v] : subdivided) {
        g.add_edge(u, s);
        g.add_edge(s, v);
        g.add_edge(s, hub1);
        g.add_edge(s, hub2);
        ++s;
    }
    g.add_edge(hub1, hub2);
    return g;
}

}  // namespace

TEST_CASE("low-degree elimination") {
    SUBCASE("a path disappears entirely") {
        Instance inst = make_instance(path_graph(5));
        eliminate_low_degree(inst);
        CHECK(inst.graph.empty());
        CHECK(inst.trace.size() == 5);
    }
    SUBCASE("K4 is untouched") {
        Instance inst = make_instance(complete_graph(4));
        eliminate_low_degree(inst);
        CHECK(inst.graph.vertex_count() == 4);
        CHECK(inst.trace.empty());
    }
    SUBCASE("a pendant vertex on K4 goes away") {
        Graph g = complete_graph(4);
        g.add_vertex(4);
        g.add_edge(3, 4);
        Instance inst = make_instance(g);
        eliminate_low_degree(inst);
        CHECK(inst.graph.vertex_count() == 4);
        CHECK(inst.trace.size() == 1);
    }
}

TEST_CASE("the min-degree-3 residual does not depend on removal order") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(14, 0.22, 1000 + static_cast<std::uint64_t>(trial));
        Instance a = make_instance(g);
        eliminate_low_degree(a);
        // Shuffled order: repeatedly delete a random low-degree vertex.
        Graph h = g;
        for (;;) {
            std::vector<VertexId> low;
            for (VertexId v : h.vertices())
                if (h.degree(v) <= 2) low.push_back(v);
            if (low.empty()) break;
            h.remove_vertex(low[rng() % low.size()]);
        }
        CHECK(a.graph == h);
    }
}

TEST_CASE("find_branch_target") {
    SUBCASE("K4 has a degree-three cycle") {
        Instance inst = make_instance(complete_graph(4));
        auto v = find_branch_target(inst);
        REQUIRE(v.has_value());
        CHECK(inst.graph.degree(*v) == 3);
    }
    SUBCASE("embedded nine-vertex tree picks the three-way vertex") {
        Instance inst = make_instance(figure_fixture("fig2"));
        auto v = find_branch_target(inst);
        REQUIRE(v.has_value());
        CHECK(*v == 0);
    }
    SUBCASE("path component of nine picks the median") {
        // Path 0..8 of degree-three vertices; the padding vertices 9..12
        // keep minimum degree three without joining the component.
        Graph g = Graph::with_vertices(13);
        for (VertexId v = 0; v + 1 < 9; ++v) g.add_edge(v, v + 1);
        for (VertexId v = 0; v < 9; ++v) g.add_edge(v, 9);
        for (VertexId v : {0u, 8u, 11u, 12u}) g.add_edge(v, 10);
        g.add_edge(9, 11);
        g.add_edge(9, 12);
        g.add_edge(11, 12);
        for (VertexId v : g.vertices()) REQUIRE(g.degree(v) >= 3);
        REQUIRE(g.degree(9) > 4);
        REQUIRE(g.degree(10) == 4);
        Instance inst = make_instance(g);
        auto v = find_branch_target(inst);
        REQUIRE(v.has_value());
        CHECK(*v == 4);
    }
    SUBCASE("no qualifying component means no target") {
        Graph g = no_target_fixture();
        for (VertexId v : g.vertices()) REQUIRE(g.degree(v) >= 3);
        // Independent scan: every degree-three component must be small and
        // acyclic for the fixture to be valid.
        auto comps = components_where(g, [&](VertexId v) { return g.degree(v) == 3; });
        for (const auto& comp : comps) {
            std::set<VertexId> cs(comp.begin(), comp.end());
            std::size_t edges = 0;
            for (VertexId v : comp)
                for (VertexId u : g.neighbors(v)) edges += cs.count(u);
            edges /= 2;
            REQUIRE(edges < comp.size());
            REQUIRE(comp.size() < 9);
        }
        CHECK_FALSE(find_branch_target(make_instance(g)).has_value());
    }
}

TEST_CASE("branch_on explores neighbor pairs") {
    SUBCASE("independent neighborhood yields three children") {
        // Degree-three vertex 0 whose neighbors are pairwise non-adjacent,
        // each wired into its own K4.
        Graph g = Graph::with_vertices(13);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        VertexId next = 4;
        for (VertexId hub : {1u, 2u, 3u}) {
            VertexId a = next++, b = next++, c = next++;
            g.add_edge(hub, a);
            g.add_edge(hub, b);
            g.add_edge(hub, c);
            g.add_edge(a, b);
            g.add_edge(a, c);
            g.add_edge(b, c);
        }
        Instance inst = make_instance(g);
        auto children = branch_on(inst, 0);
        CHECK(children.size() == 3);
    }
    SUBCASE("K4 yields no children") {
        Instance inst = make_instance(complete_graph(4));
        CHECK(branch_on(inst, 0).empty());
    }
    SUBCASE("feasibility is the union over children") {
        std::vector<Graph> corpus;
        corpus.push_back(figure_fixture("fig2"));
        for (std::uint64_t s = 0; s < 40; ++s)
            corpus.push_back(random_min_degree_3(12, 0.2, 50 + s));
        int branched = 0;
        for (const Graph& g : corpus) {
            Instance inst = make_instance(g);
            eliminate_low_degree(inst);
            if (inst.graph.empty()) continue;
            auto target = find_branch_target(inst);
            if (!target) continue;
            ++branched;
            bool parent = brute_force(inst.graph);
            bool any_child = false;
            for (const Instance& child : branch_on(inst, *target))
                any_child = any_child || brute_force(child.graph);
            CHECK(parent == any_child);
        }
        CHECK(branched > 0);
    }
}

TEST_CASE("replay") {
    SUBCASE("an eliminated path replays to a proper coloring") {
        Graph g = path_graph(5);
        Instance inst = make_instance(g);
        eliminate_low_degree(inst);
        REQUIRE(inst.graph.empty());
        Coloring coloring = replay(inst.trace, {});
        CHECK_FALSE(verify_coloring(g, coloring).has_value());
    }
    SUBCASE("merge replay copies the survivor's color") {
        Graph g = cycle_graph(4);
        Instance inst = make_instance(g);
        auto rec = inst.graph.merge_vertices(0, 2);
        REQUIRE(rec.has_value());
        inst.trace.push_back(Merged{*rec});
        Coloring residual{{0, 0}, {1, 1}, {3, 1}};
        Coloring full = replay(inst.trace, residual);
        CHECK(full.at(2) == 0);
        CHECK_FALSE(verify_coloring(g, full).has_value());
    }
    SUBCASE("dominated-vertex replay copies the dominating color") {
        std::vector<TraceStep> trace{RemovedDominated{5, 2}};
        Coloring residual{{2, 1}};
        CHECK(replay(trace, residual).at(5) == 1);
    }
    SUBCASE("corrupt traces fail loudly") {
        std::vector<TraceStep> trace{RemovedLowDegree{9, {0, 1, 2}}};
        Coloring residual{{0, 0}, {1, 1}, {2, 2}};
        CHECK_THROWS_AS(replay(trace, residual), std::logic_error);
    }
}

TEST_CASE("exhausted branching leaves only small acyclic degree-three components") {
    for (std::uint64_t s = 0; s < 25; ++s) {
        Instance inst = make_instance(random_min_degree_3(24, 0.16, 300 + s));
        for (;;) {
            eliminate_low_degree(inst);
            if (inst.graph.empty()) break;
            auto target = find_branch_target(inst);
            if (!target) break;
            auto children = branch_on(inst, *target);
            if (children.empty()) break;
            inst = children.front();
        }
        const Graph& g = inst.graph;
        auto comps = components_where(g, [&](VertexId v) { return g.degree(v) == 3; });
        for (const auto& comp : comps) {
            std::set<VertexId> cs(comp.begin(), comp.end());
            std::size_t edges = 0;
            for (VertexId v : comp)
                for (VertexId u : g.neighbors(v)) edges += cs.count(u);
            edges /= 2;
            CHECK(edges < comp.size());
            CHECK(comp.size() <= 8);
        }
    }
}
