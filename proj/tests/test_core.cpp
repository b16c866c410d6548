#include "doctest.h"

#include <random>

#include "toughtree/core.hpp"
#include "toughtree/graph.hpp"
#include "test_util.hpp"

using namespace toughtree;

TEST_CASE("chordality basics") {
    CHECK(core::is_chordal(complete_graph(4)).has_value());
    CHECK(core::is_chordal(path_graph(5)).has_value());
    CHECK(core::is_chordal(Graph(0)).has_value());
    CHECK(core::is_chordal(Graph(1)).has_value());
    CHECK_FALSE(core::is_chordal(cycle_graph(4)).has_value());
    CHECK_FALSE(core::is_chordal(cycle_graph(6)).has_value());
    CHECK(core::is_chordal(cycle_graph(3)).has_value());

    // C4 plus a chord is chordal.
    Graph g = cycle_graph(4);
    g.add_edge(0, 2);
    CHECK(core::is_chordal(g).has_value());
}

TEST_CASE("elimination order verification agrees with recognition") {
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        Graph g = testutil::random_ktree(2 + it % 3, 10, rng);
        auto eo = core::is_chordal(g);
        REQUIRE(eo.has_value());
        CHECK(core::verify_elimination_order(g, *eo));
    }
    // A wrong order on C4+chord fails verification.
    Graph g = cycle_graph(4);
    g.add_edge(0, 2);
    core::EliminationOrder bad{{1, 3, 0, 2}};
    CHECK_FALSE(core::verify_elimination_order(g, bad));
}

TEST_CASE("k-tree recognition") {
    CHECK(core::recognize_ktree(complete_graph(4), 3).has_value());
    CHECK(core::recognize_ktree(path_graph(6), 1).has_value());
    CHECK_FALSE(core::recognize_ktree(path_graph(6), 2).has_value());
    CHECK_FALSE(core::recognize_ktree(cycle_graph(5), 2).has_value());

    std::mt19937 rng(11);
    for (int k = 1; k <= 4; ++k)
        for (int it = 0; it < 20; ++it) {
            Graph g = testutil::random_ktree(k, 6 + it % 8, rng);
            auto cert = core::recognize_ktree(g, k);
            REQUIRE(cert.has_value());
            CHECK(core::verify_certificate(g, *cert));
            CHECK(core::replay_certificate(*cert, g.num_vertices()) == g);
            // A k-tree is not a (k+1)-tree (vertex counts differ at base).
            if (g.num_vertices() > k + 2) CHECK_FALSE(core::recognize_ktree(g, k + 1).has_value());
        }
}

TEST_CASE("k-connectivity") {
    CHECK(core::is_k_connected(complete_graph(5), 4));
    CHECK(core::is_k_connected(cycle_graph(6), 2));
    CHECK_FALSE(core::is_k_connected(cycle_graph(6), 3));
    CHECK_FALSE(core::is_k_connected(path_graph(4), 2));
    CHECK(core::is_k_connected(path_graph(4), 1));
    Graph two(2);
    CHECK_FALSE(core::is_k_connected(two, 1));
    two.add_edge(0, 1);
    CHECK(core::is_k_connected(two, 1));

    // A k-tree on >= k+2 vertices is k-connected but never (k+1)-connected.
    std::mt19937 rng(13);
    for (int k = 2; k <= 3; ++k) {
        Graph g = testutil::random_ktree(k, 10, rng);
        CHECK(core::is_k_connected(g, k));
        CHECK_FALSE(core::is_k_connected(g, k + 1));
    }
}

TEST_CASE("planar 3-tree criterion") {
    // Stacked (apollonian) 3-trees are planar.
    std::mt19937 rng(17);
    Graph g = testutil::random_ktree(3, 12, rng);
    auto cert = core::recognize_ktree(g, 3);
    REQUIRE(cert.has_value());
    // The criterion may accept or reject a random 3-tree; build a guaranteed
    // planar one: always subdivide a face of the previous insertion.
    Graph p(8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) p.add_edge(i, j);
    // Each new vertex goes into a face no earlier vertex was placed in.
    int faces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (int v = 4; v < 8; ++v)
        for (int x : faces[v - 4]) p.add_edge(v, x);
    auto pc = core::recognize_ktree(p, 3);
    REQUIRE(pc.has_value());
    CHECK(core::is_planar_3tree(p, *pc));

    // K5 minus nothing is not even a 3-tree; a non-planar 3-tree: stack
    // three vertices onto the same triangle => K_{3,3}-free? Instead use the
    // known non-planar 3-tree: attach two vertices to the same triangle and
    // a third to a triangle using both.
    Graph np(7);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) np.add_edge(i, j);
    for (int v : {4, 5, 6})
        for (int x : {0, 1, 2}) np.add_edge(v, x);
    auto nc = core::recognize_ktree(np, 3);
    REQUIRE(nc.has_value());
    CHECK_FALSE(core::is_planar_3tree(np, *nc));
}

TEST_CASE("classification of tough chordal planar candidates") {
    CHECK(core::classify_tough_chordal_planar(complete_graph(1)) ==
          core::ToughChordalPlanarClass::K1);
    CHECK(core::classify_tough_chordal_planar(complete_graph(2)) ==
          core::ToughChordalPlanarClass::K2);
    Graph p(5);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) p.add_edge(i, j);
    for (int x : {0, 1, 2}) p.add_edge(4, x);
    CHECK(core::classify_tough_chordal_planar(p) == core::ToughChordalPlanarClass::ThreeTree);
    CHECK(core::classify_tough_chordal_planar(path_graph(4)) ==
          core::ToughChordalPlanarClass::NotApplicable);
}
