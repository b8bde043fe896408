#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "threecolor/bushy.hpp"
#include "threecolor/generate.hpp"
#include "threecolor/reduce.hpp"

using namespace threecolor;
using namespace threecolor::testing;

namespace {

BushyTree star(VertexId root, std::vector<VertexId> leaves) {
    BushyTree t;
    t.root = root;
    t.internal = {root};
    for (VertexId l : leaves) {
        t.leaves.insert(l);
        t.parent[l] = root;
    }
    return t;
}

std::set<VertexId> leaf_set(const BushyForest& f, VertexId root) {
    for (const auto& t : f.trees)
        if (t.root == root) return t.leaves;
    FAIL("no tree rooted at ", root);
    return {};
}

// Drive a graph through elimination and first-child branching until the
// forest preconditions hold.
Graph reduce_to_forest_stage(Graph g) {
    Instance inst{std::move(g), {}, {}};
    for (;;) {
        eliminate_low_degree(inst);
        if (inst.graph.empty()) return inst.graph;
        auto target = find_branch_target(inst);
        if (!target) return inst.graph;
        auto children = branch_on(inst, *target);
        if (children.empty()) return Graph{};
        inst = children.front();
    }
}

}  // namespace

TEST_CASE("greedy construction on the two-internal example graph") {
    Graph g = figure_fixture("fig3");
    BushyForest f = build_maximal_bushy_forest(g);
    REQUIRE(f.trees.size() == 1);
    CHECK(f.trees[0].internal == std::set<VertexId>{0, 1});
    CHECK(f.trees[0].leaves == std::set<VertexId>{2, 3, 4, 5, 6, 7});
    CHECK(f.trees[0].root == 0);
    CHECK(check_maximal(g, f).empty());
    SUBCASE("no high-magnitude vertex, so the rewrite pass is a fixpoint") {
        CHECK(high_magnitude_vertices(g, f).empty());
        BushyForest lm = to_low_magnitude(g, f);
        REQUIRE(lm.trees.size() == 1);
        CHECK(lm.trees[0].internal == f.trees[0].internal);
        CHECK(lm.trees[0].leaves == f.trees[0].leaves);
    }
}

TEST_CASE("a star center is the only possible tree") {
    // K_{1,4} star whose leaves carry enough padding to reach minimum
    // degree three without another degree-4 vertex.
    Graph g = Graph::with_vertices(11);
    for (VertexId l : {1u, 2u, 3u, 4u}) g.add_edge(0, l);
    // leaves tied pairwise into K4-like blocks with padding 5..10
    for (auto [u, v] : std::vector<std::pair<VertexId, VertexId>>{
             {1, 5}, {1, 6}, {5, 6}, {2, 5}, {2, 6}, {3, 7}, {3, 8}, {7, 8},
             {4, 7}, {4, 8}, {5, 9}, {6, 10}, {7, 9}, {8, 10}, {9, 10}})
        g.add_edge(u, v);
    for (VertexId v : g.vertices()) REQUIRE(g.degree(v) >= 3);
    BushyForest f = build_maximal_bushy_forest(g);
    REQUIRE(f.trees.size() == 1);
    CHECK(f.trees[0].root == 0);
    CHECK(f.trees[0].leaves == std::set<VertexId>{1, 2, 3, 4});
    CHECK(check_maximal(g, f).empty());
}

TEST_CASE("check_maximal finds planted violations") {
    SUBCASE("built forests pass") {
        Graph g = worst_case_family(2);
        BushyForest f = build_maximal_bushy_forest(g);
        CHECK(check_maximal(g, f).empty());
    }
    SUBCASE("deleting a tree exposes its root") {
        Graph g = worst_case_family(2);
        BushyForest f = build_maximal_bushy_forest(g);
        REQUIRE(f.trees.size() == 2);
        f.trees.pop_back();
        auto violations = check_maximal(g, f);
        CHECK_FALSE(violations.empty());
        bool names_root = std::any_of(violations.begin(), violations.end(), [](const auto& s) {
            return s.find("four outside neighbors: 21") != std::string::npos;
        });
        CHECK(names_root);
    }
    SUBCASE("a leaf with three outside neighbors") {
        Graph g = Graph::with_vertices(8);
        for (VertexId l : {1u, 2u, 3u, 4u}) g.add_edge(0, l);
        for (VertexId u : {5u, 6u, 7u}) g.add_edge(1, u);
        BushyForest f;
        f.trees.push_back(star(0, {1, 2, 3, 4}));
        auto violations = check_maximal(g, f);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].find("leaf with three outside neighbors: 1") != std::string::npos);
    }
}

TEST_CASE("rewrite: high-magnitude vertex on a multi-internal tree") {
    Graph g = graph_from_edges(12, {{0, 1}, {1, 2}, {1, 4}, {1, 6}, {2, 3}, {2, 5},
                                    {2, 7}, {0, 8}, {8, 9}, {8, 10}, {8, 11}});
    BushyForest f;
    BushyTree t;
    t.root = 1;
    t.internal = {1, 2};
    t.leaves = {0, 3, 4, 5, 6, 7};
    t.parent = {{2, 1}, {0, 1}, {4, 1}, {6, 1}, {3, 2}, {5, 2}, {7, 2}};
    f.trees.push_back(t);
    REQUIRE(check_maximal(g, f).empty());
    REQUIRE(high_magnitude_vertices(g, f) == std::set<VertexId>{8});

    BushyForest lm = to_low_magnitude(g, f);
    REQUIRE(lm.trees.size() == 2);
    CHECK(leaf_set(lm, 2) == std::set<VertexId>{1, 3, 5, 7});
    CHECK(leaf_set(lm, 8) == std::set<VertexId>{0, 9, 10, 11});
    CHECK(check_maximal(g, lm).empty());
    CHECK(check_low_magnitude(g, lm).empty());
}

TEST_CASE("rewrite: high-magnitude vertex on a five-leaf tree") {
    Graph g = graph_from_edges(10, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                    {0, 6}, {6, 7}, {6, 8}, {6, 9}});
    BushyForest f;
    f.trees.push_back(star(1, {0, 2, 3, 4, 5}));
    REQUIRE(check_maximal(g, f).empty());
    REQUIRE(high_magnitude_vertices(g, f) == std::set<VertexId>{6});

    BushyForest lm = to_low_magnitude(g, f);
    REQUIRE(lm.trees.size() == 2);
    CHECK(leaf_set(lm, 1) == std::set<VertexId>{2, 3, 4, 5});
    CHECK(leaf_set(lm, 6) == std::set<VertexId>{0, 7, 8, 9});
    CHECK(check_low_magnitude(g, lm).empty());
}

TEST_CASE("rewrite: non-adjacent pair without a common neighbor") {
    Graph g = graph_from_edges(13, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6},
                                    {5, 7}, {5, 8}, {0, 9}, {9, 10}, {9, 11}, {9, 12}});
    BushyForest f;
    f.trees.push_back(star(1, {0, 2, 3, 4}));
    REQUIRE(check_maximal(g, f).empty());
    REQUIRE(high_magnitude_vertices(g, f) == std::set<VertexId>{5, 9});

    BushyForest lm = to_low_magnitude(g, f);
    REQUIRE(lm.trees.size() == 2);
    CHECK(leaf_set(lm, 5) == std::set<VertexId>{2, 6, 7, 8});
    CHECK(leaf_set(lm, 9) == std::set<VertexId>{0, 10, 11, 12});
    CHECK(check_low_magnitude(g, lm).empty());
}

TEST_CASE("rewrite: adjacent pair becomes a two-internal tree") {
    Graph g = graph_from_edges(11, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 5}, {4, 6},
                                    {5, 6}, {5, 7}, {5, 9}, {6, 8}, {6, 10}});
    BushyForest f;
    f.trees.push_back(star(0, {1, 2, 3, 4}));
    REQUIRE(check_maximal(g, f).empty());
    REQUIRE(high_magnitude_vertices(g, f) == std::set<VertexId>{5, 6});

    BushyForest lm = to_low_magnitude(g, f);
    REQUIRE(lm.trees.size() == 1);
    CHECK(lm.trees[0].internal == std::set<VertexId>{5, 6});
    CHECK(lm.trees[0].root == 5);
    CHECK(lm.trees[0].leaves == std::set<VertexId>{2, 4, 7, 8, 9, 10});
    CHECK(check_low_magnitude(g, lm).empty());
}

TEST_CASE("worst-case family partition counts") {
    for (std::size_t t : {1u, 2u, 4u}) {
        CAPTURE(t);
        Graph g = worst_case_family(t);
        BushyForest f = to_low_magnitude(g, build_maximal_bushy_forest(g));
        REQUIRE(f.trees.size() == t);
        Partition p = partition(g, f);
        CHECK(p.roots.size() == t);
        CHECK(p.internal.empty());
        CHECK(p.leaves.size() == 4 * t);
        CHECK(p.n3[6].size() == 6 * t);
        CHECK(p.u_prime.size() == 2 * t);
        for (int i = 1; i <= 8; ++i)
            if (i != 6) CHECK(p.n3[static_cast<std::size_t>(i)].empty());
    }
}

TEST_CASE("worst-case family per-tree detail at one copy") {
    Graph g = worst_case_family(1);
    BushyForest f = to_low_magnitude(g, build_maximal_bushy_forest(g));
    Partition p = partition(g, f);
    CHECK(p.roots == std::set<VertexId>{0});
    CHECK(p.leaves == std::set<VertexId>{1, 2, 3, 4});
    CHECK(p.n3[6] == std::set<VertexId>{5, 6, 7, 8, 9, 10});
    CHECK(p.n1 == std::set<VertexId>{11, 12});
    CHECK(p.u_prime == std::set<VertexId>{13, 14});
    CHECK(p.u_by_n1[1] == std::set<VertexId>{15, 16, 17, 19});
    CHECK(p.u_by_n1[0] == std::set<VertexId>{18, 20});
}

TEST_CASE("partition of the two-internal example graph") {
    Graph g = figure_fixture("fig3");
    BushyForest f = to_low_magnitude(g, build_maximal_bushy_forest(g));
    Partition p = partition(g, f);
    CHECK(p.n2 == std::set<VertexId>{9, 10, 13, 14});
    CHECK(p.n1 == std::set<VertexId>{8, 11, 12, 15});
    CHECK(p.n3_all().empty());
    CHECK(p.u_prime.empty());
    CHECK(p.u_by_n1[2] == std::set<VertexId>{16, 17, 18, 19});
}

TEST_CASE("random residuals satisfy maximality, low magnitude and the constraints") {
    int nonempty = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 20 + seed % 21;
        const double density = 0.08 + 0.04 * static_cast<double>(seed % 4);
        Graph g = reduce_to_forest_stage(random_min_degree_3(n, density, 9000 + seed));
        if (g.empty()) continue;
        ++nonempty;
        CAPTURE(seed);
        BushyForest f = build_maximal_bushy_forest(g);
        CHECK(check_maximal(g, f).empty());
        BushyForest lm = to_low_magnitude(g, f);
        CHECK(check_maximal(g, lm).empty());
        CHECK(check_low_magnitude(g, lm).empty());
        Partition p = partition(g, lm);  // throws if a constraint fails
        CHECK(check_partition_constraints(p).empty());
    }
    CHECK(nonempty > 5);
}
