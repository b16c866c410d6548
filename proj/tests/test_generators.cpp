#include "doctest.h"

#include <algorithm>
#include <random>

#include "toughtree/core.hpp"
#include "toughtree/generators.hpp"
#include "toughtree/oracles.hpp"
#include "toughtree/twdp.hpp"

using namespace toughtree;

TEST_CASE("basic 3-twig") {
    Graph b = generators::basic_3twig(3);
    CHECK(b.num_vertices() == 7);
    std::vector<int> deg;
    for (int v = 0; v < 7; ++v) deg.push_back(b.degree(v));
    std::sort(deg.rbegin(), deg.rend());
    CHECK(deg == std::vector<int>{6, 5, 5, 5, 3, 3, 3});
    CHECK(core::recognize_ktree(b, 3).has_value());

    CHECK(generators::basic_3twig(2).num_vertices() == 6);
    CHECK_THROWS_AS(generators::basic_3twig(1), std::invalid_argument);
}

TEST_CASE("H_0 passes its validation suite") {
    Graph h0 = generators::build_H0();
    auto rep = generators::validate_H0(h0);
    for (auto& [name, ok] : rep.checks) {
        CAPTURE(name);
        CHECK(ok);
    }
    CHECK(rep.pass);
    CHECK(h0.vertices_with_label("white").size() == 30);
}

TEST_CASE("validation rejects wrong graphs") {
    auto short_rep = generators::validate_H0(generators::basic_3twig(3));
    CHECK_FALSE(short_rep.pass);

    // A white-white edge breaks the degree/simpliciality profile.
    Graph bad = generators::build_H0();
    auto whites = bad.vertices_with_label("white");
    bad.add_edge(whites[0], whites[1]);
    CHECK_FALSE(generators::validate_H0(bad).pass);
}

TEST_CASE("H_0^+ structure") {
    Graph hp = generators::build_H0_plus();
    CHECK(hp.num_vertices() == 72);
    CHECK(core::recognize_ktree(hp, 3).has_value());
    auto t = twdp::toughness_exact(hp);
    CHECK(!(t.value < Rational(1, 1)));
}

TEST_CASE("family metrics closed forms") {
    auto m0 = generators::family_metrics(0);
    CHECK(m0.f == 71);
    CHECK(m0.c == 63);
    CHECK(m0.p == 65);
    CHECK(m0.w == 24);
    auto m1 = generators::family_metrics(1);
    CHECK(m1.f == 2171);
    CHECK(m1.c == 1427);
    CHECK(m1.p == 1555);
    CHECK(m1.w == 530);
    CHECK(generators::family_metrics(2).f == 65171);
}

TEST_CASE("expansion produces a planar 3-tree of the right size") {
    Graph h1 = generators::expand_Hn(generators::build_H0());
    CHECK(h1.num_vertices() == 2171);
    CHECK(h1.vertices_with_label("white").size() == 900);
    auto cert = core::recognize_ktree(h1, 3);
    REQUIRE(cert.has_value());
    CHECK(core::is_planar_3tree(h1, *cert));

    CHECK_THROWS_AS(generators::expand_Hn(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("universal vertices") {
    CHECK(generators::add_universal(complete_graph(3), 1) == complete_graph(4));
    Graph h04 = generators::build_Hnk(0, 4);
    CHECK(h04.num_vertices() == 72);
    CHECK(core::recognize_ktree(h04, 4).has_value());
    Graph h05 = generators::build_Hnk(0, 5);
    CHECK(h05.num_vertices() == 73);
    CHECK(core::recognize_ktree(h05, 5).has_value());
}

TEST_CASE("balanced cubic trees") {
    CHECK(generators::balanced_cubic_tree(1) == star_graph(3));
    for (int r = 1; r <= 6; ++r) {
        Graph t = generators::balanced_cubic_tree(r);
        CHECK(t.num_vertices() == 3 * (1 << r) - 2);
        CHECK(t.num_edges() == t.num_vertices() - 1);
        CHECK(t.is_connected());
        int leaves = 0;
        for (int v = 0; v < t.num_vertices(); ++v) {
            int d = t.degree(v);
            CHECK((d == 1 || d == 3));
            if (d == 1) ++leaves;
        }
        CHECK(leaves == 3 * (1 << (r - 1)));
    }
    CHECK_THROWS_AS(generators::balanced_cubic_tree(0), std::invalid_argument);
}

TEST_CASE("graph square") {
    CHECK(generators::square(path_graph(3)) == complete_graph(3));
    CHECK(generators::square(star_graph(3)) == complete_graph(4));
    Graph sq = generators::square(generators::balanced_cubic_tree(2));
    auto eo = core::is_chordal(sq);
    CHECK(eo.has_value());
    CHECK(twdp::toughness_exact(sq).value == Rational(1, 1));
    CHECK(twdp::longest_cycle(sq).value == 8);
    CHECK(twdp::longest_path(sq).value == 10);
}

TEST_CASE("arranged block with the H_0 instantiation") {
    generators::ArrangedBlock b;
    b.g0 = generators::build_H0();
    b.j = 71;
    b.white = b.g0.vertices_with_label("white");
    b.outer = {0, 1, 2};
    b.k = 22;
    CHECK(generators::validate_arranged_block(b));

    auto [v0, c0] = generators::closed_form_bounds(b, 0);
    CHECK(v0 == 71);
    CHECK(c0 == 63);
    auto [v1, c1] = generators::closed_form_bounds(b, 1);
    CHECK(v1 == 2171);
    CHECK(c1 == 1427);

    CHECK(generators::arranged_block_expand(b, 0).num_vertices() == 71);
    Graph g1 = generators::arranged_block_expand(b, 1);
    CHECK(g1.num_vertices() == 2171);
    CHECK(core::recognize_ktree(g1, 3).has_value());

    generators::ArrangedBlock bad = b;
    bad.k = 0;
    CHECK_THROWS_AS(generators::arranged_block_expand(bad, 1), std::invalid_argument);
}

TEST_CASE("toughness is monotone along simplicial build orders") {
    // Along a k-tree certificate build order, oracle toughness never
    // increases as vertices are appended.
    std::mt19937 rng(53);
    for (int it = 0; it < 8; ++it) {
        int k = 2 + it % 2;
        Graph g(0);
        {
            // Small random k-tree built directly.
            int n = 9 + it % 3;
            g = Graph(n);
            std::vector<std::vector<int>> cliques;
            std::vector<int> c0;
            for (int i = 0; i <= k; ++i) {
                for (int j = 0; j < i; ++j) g.add_edge(i, j);
                c0.push_back(i);
            }
            for (int i = 0; i <= k; ++i) {
                std::vector<int> c;
                for (int j = 0; j <= k; ++j)
                    if (j != i) c.push_back(c0[j]);
                cliques.push_back(c);
            }
            for (int v = k + 1; v < n; ++v) {
                auto c = cliques[rng() % cliques.size()];
                for (int u : c) g.add_edge(v, u);
                for (int drop = 0; drop < k; ++drop) {
                    auto nc = c;
                    nc[drop] = v;
                    cliques.push_back(nc);
                }
            }
        }
        Rational prev = Rational::infinity();
        for (int m = k + 1; m <= g.num_vertices(); ++m) {
            std::vector<int> keep;
            for (int v = 0; v < m; ++v) keep.push_back(v);
            Graph h = g.induced(keep);
            auto t = oracles::bf_toughness(h).value;
            CHECK(!(prev < t));
            prev = t;
        }
    }
}
