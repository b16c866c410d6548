#include "doctest.h"

#include <random>

#include "toughtree/oracles.hpp"
#include "toughtree/twdp.hpp"
#include "test_util.hpp"

using namespace toughtree;

TEST_CASE("clique tree construction and verification") {
    auto ct = twdp::clique_tree(complete_graph(4));
    CHECK(ct.bags.size() == 1);
    CHECK(ct.width == 3);
    CHECK(twdp::verify_clique_tree(complete_graph(4), ct));

    auto pt = twdp::clique_tree(path_graph(6));
    CHECK(pt.width == 1);
    CHECK(pt.bags.size() == 5);
    CHECK(twdp::verify_clique_tree(path_graph(6), pt));

    CHECK_THROWS_AS(twdp::clique_tree(cycle_graph(5)), std::invalid_argument);

    std::mt19937 rng(31);
    for (int it = 0; it < 30; ++it) {
        Graph g = testutil::random_ktree(2 + it % 3, 12, rng);
        auto t = twdp::clique_tree(g);
        CHECK(twdp::verify_clique_tree(g, t));
        CHECK(t.width == 2 + it % 3);
    }
}

TEST_CASE("longest path and cycle on knowns") {
    CHECK(twdp::longest_path(path_graph(7)).value == 7);
    CHECK(twdp::longest_cycle(path_graph(7)).value == 0);
    CHECK(twdp::longest_path(star_graph(4)).value == 3);
    CHECK(twdp::longest_cycle(complete_graph(6)).value == 6);
    CHECK(twdp::longest_path(Graph(3)).value == 1);
    CHECK(twdp::longest_path(complete_graph(1)).value == 1);

    auto res = twdp::longest_cycle(complete_graph(5));
    CHECK(res.value == 5);
    CHECK(validate_path_witness(complete_graph(5), res.witness));
    CHECK(res.witness.cyclic);
    CHECK(static_cast<int>(res.witness.seq.size()) == 5);

    auto pr = twdp::longest_path(star_graph(6));
    CHECK(pr.value == 3);
    CHECK(validate_path_witness(star_graph(6), pr.witness));
    CHECK(static_cast<int>(pr.witness.seq.size()) == 3);
}

TEST_CASE("decision engine agrees with brute force on random k-trees") {
    std::mt19937 rng(37);
    for (int it = 0; it < 60; ++it) {
        int k = 2 + it % 3;
        int n = 6 + it % 7;
        Graph g = testutil::random_ktree(k, n, rng);
        auto lp = twdp::longest_path(g);
        auto lc = twdp::longest_cycle(g);
        CHECK(lp.value == oracles::bf_longest_path(g));
        CHECK(lc.value == oracles::bf_longest_cycle(g));
        CHECK(validate_path_witness(g, lp.witness));
        CHECK(static_cast<int>(lp.witness.seq.size()) == lp.value);
        if (lc.value > 0) {
            CHECK(validate_path_witness(g, lc.witness));
            CHECK(static_cast<int>(lc.witness.seq.size()) == lc.value);
        }
        for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = x1 + 1; x2 < n; ++x2)
                CHECK(twdp::has_hamilton_path_between(g, x1, x2) ==
                      oracles::bf_has_hamilton_path_between(g, x1, x2));
    }
}

TEST_CASE("weighted path objective") {
    std::mt19937 rng(41);
    for (int it = 0; it < 25; ++it) {
        Graph g = testutil::random_ktree(2, 9, rng);
        std::vector<int> w(9);
        for (auto& x : w) x = static_cast<int>(rng() % 4);
        auto lp = twdp::longest_path(g, &w);
        CHECK(lp.value == oracles::bf_longest_path(g, &w));
        auto lc = twdp::longest_cycle(g, &w);
        CHECK(lc.value == oracles::bf_longest_cycle(g, &w));
    }
}

TEST_CASE("special-end split") {
    // P4 with special = both leaves: the full path has two special ends.
    std::vector<int> w(4, 1);
    std::vector<char> sp{1, 0, 0, 1};
    auto split = twdp::max_weight_path_by_special_ends(path_graph(4), w, sp);
    CHECK(split[2] == 4);
    CHECK(split[1] == 3);  // 0..2 or 1..3
    CHECK(split[0] == 2);  // 1..2
}

TEST_CASE("exact toughness via decomposition") {
    CHECK(twdp::toughness_exact(complete_graph(7)).value.is_infinite());
    CHECK(twdp::toughness_exact(star_graph(3)).value == Rational(1, 3));
    CHECK(twdp::toughness_exact(path_graph(9)).value == Rational(1, 2));

    std::mt19937 rng(43);
    for (int it = 0; it < 40; ++it) {
        int k = 2 + it % 3;
        Graph g = testutil::random_ktree(k, 7 + it % 6, rng);
        auto rep = twdp::toughness_exact(g);
        auto bf = oracles::bf_toughness(g);
        CHECK(rep.value == bf.value);
        CHECK(validate_toughness_witness(g, rep));
    }
}

TEST_CASE("parametric toughness path matches the table path") {
    // Force both engines on the same graphs by size: small graphs use the
    // s(m) table; verify the parametric machinery indirectly through larger
    // chordal graphs against subset enumeration where still feasible.
    std::mt19937 rng(47);
    for (int it = 0; it < 10; ++it) {
        Graph g = testutil::random_ktree(3, 14, rng);
        auto rep = twdp::toughness_exact(g);
        auto bf = oracles::bf_toughness(g);
        CHECK(rep.value == bf.value);
    }
}
