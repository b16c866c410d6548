#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "toughtree/core.hpp"
#include "toughtree/generators.hpp"
#include "toughtree/oracles.hpp"
#include "toughtree/squares.hpp"
#include "toughtree/twdp.hpp"

using namespace toughtree;
namespace sq = toughtree::squares;

namespace {

// Test-only oracle: does `pat` embed into the tree `host` as a subgraph?
// (For trees, subgraph containment equals induced containment.)
bool embeds(const Graph& host, const Graph& pat) {
    int hp = host.num_vertices(), pp = pat.num_vertices();
    if (pp > hp) return false;
    std::vector<int> map(pp, -1);
    std::vector<char> used(hp, 0);
    // Map pattern vertices in a connected order (vertex 0 first, BFS).
    std::vector<int> order{0}, par(pp, -1);
    std::vector<char> seen(pp, 0);
    seen[0] = 1;
    for (size_t i = 0; i < order.size(); ++i)
        for (int w : pat.neighbors(order[i]))
            if (!seen[w]) {
                seen[w] = 1;
                par[w] = order[i];
                order.push_back(w);
            }
    auto rec = [&](auto&& self, size_t idx) -> bool {
        if (idx == order.size()) return true;
        int pv = order[idx];
        for (int hv = 0; hv < hp; ++hv) {
            if (used[hv] || host.degree(hv) < pat.degree(pv)) continue;
            if (par[pv] >= 0 && !host.has_edge(map[par[pv]], hv)) continue;
            bool ok = true;
            for (int pw : pat.neighbors(pv))
                if (map[pw] >= 0 && pw != par[pv] && !host.has_edge(map[pw], hv)) ok = false;
            if (!ok) continue;
            used[hv] = 1;
            map[pv] = hv;
            if (self(self, idx + 1)) return true;
            used[hv] = 0;
            map[pv] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

Graph subdivided_star(int arms) {
    Graph g(1);
    for (int i = 0; i < arms; ++i) {
        int a = g.add_vertex(), b = g.add_vertex();
        g.add_edge(0, a);
        g.add_edge(a, b);
    }
    return g;
}

// Two subdivided-star centers joined by a path with `len` edges; every
// interior path vertex gets one pendant neighbor.
Graph family_f_member(int len) {
    Graph g = subdivided_star(3);
    int prev = 0;
    for (int i = 1; i < len; ++i) {
        int mid = g.add_vertex();
        g.add_edge(prev, mid);
        int pend = g.add_vertex();
        g.add_edge(mid, pend);
        prev = mid;
    }
    int c2 = g.add_vertex();
    g.add_edge(prev, c2);
    for (int i = 0; i < 3; ++i) {
        int a = g.add_vertex(), b = g.add_vertex();
        g.add_edge(c2, a);
        g.add_edge(a, b);
    }
    return g;
}

// Spider with three legs of the given lengths, each ending at the center of
// a five-vertex path.
Graph family_x_member(const std::vector<int>& legs) {
    Graph g(1);
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            int nxt = g.add_vertex();
            g.add_edge(prev, nxt);
            prev = nxt;
        }
        for (int side = 0; side < 2; ++side) {
            int a = g.add_vertex(), b = g.add_vertex();
            g.add_edge(prev, a);
            g.add_edge(a, b);
        }
    }
    return g;
}

bool contains_family_f_oracle(const Graph& host) {
    for (int len = 1; 2 * len + 12 <= host.num_vertices(); ++len)
        if (embeds(host, family_f_member(len))) return true;
    return false;
}

bool contains_family_x_oracle(const Graph& host) {
    int n = host.num_vertices();
    for (int a = 1; 13 + a <= n; ++a)
        for (int b = a; 13 + a + b <= n; ++b)
            for (int c = b; 13 + a + b + c <= n; ++c)
                if (embeds(host, family_x_member({a, b, c}))) return true;
    return false;
}

// Exact Hamilton verdicts on the built square, DP when the width guard
// allows and brute force otherwise.
std::pair<bool, bool> square_dp_verdicts(const Graph& t) {
    Graph s = generators::square(t);
    int n = s.num_vertices();
    auto eo = core::is_chordal(s);
    REQUIRE(eo.has_value());
    if (core::chordal_clique_number(s, *eo) - 1 <= twdp::kWidthGuard) {
        bool cyc = n >= 3 && twdp::longest_cycle(s).value == n;
        bool pth = twdp::longest_path(s).value == n;
        return {cyc, pth};
    }
    bool cyc = n >= 3 && oracles::bf_longest_cycle(s) == n;
    bool pth = oracles::bf_longest_path(s) == n;
    return {cyc, pth};
}

}  // namespace

TEST_CASE("free-tree enumeration matches known counts") {
    const int counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) {
        int c = 0;
        testutil::all_trees_up_to_iso(n, [&](const Graph&) { ++c; });
        CHECK(c == counts[n - 1]);
    }
}

TEST_CASE("pattern finding on knowns") {
    Graph bct2 = generators::balanced_cubic_tree(2);
    auto p = sq::find_pattern(bct2, sq::PatternKind::SK13);
    REQUIRE(p.has_value());
    CHECK(sq::validate_pattern(bct2, *p));
    for (int r = 1; r <= 6; ++r)
        CHECK(!sq::find_pattern(generators::balanced_cubic_tree(r), sq::PatternKind::SK15)
                   .has_value());
    for (int n = 2; n <= 16; ++n) {
        Graph pn = path_graph(n);
        for (auto kind : {sq::PatternKind::SK13, sq::PatternKind::SK15,
                          sq::PatternKind::FamilyF, sq::PatternKind::FamilyX})
            CHECK(!sq::find_pattern(pn, kind).has_value());
    }
    CHECK_THROWS_AS(sq::find_pattern(cycle_graph(5), sq::PatternKind::SK13),
                    std::invalid_argument);
}

TEST_CASE("family members detect themselves and survive decoration") {
    std::mt19937 rng(5150);
    for (int len = 1; len <= 3; ++len) {
        Graph f = family_f_member(len);
        auto p = sq::find_pattern(f, sq::PatternKind::FamilyF);
        REQUIRE(p.has_value());
        CHECK(sq::validate_pattern(f, *p));
        CHECK(static_cast<int>(p->vertices.size()) == f.num_vertices());
        // Extra leaves must not hide the pattern.
        Graph g = f;
        for (int extra = 0; extra < 4; ++extra) {
            int host = static_cast<int>(rng() % g.num_vertices());
            int leaf = g.add_vertex();
            g.add_edge(host, leaf);
        }
        CHECK(sq::find_pattern(g, sq::PatternKind::FamilyF).has_value());
    }
    for (auto legs : std::vector<std::vector<int>>{{1, 1, 1}, {1, 2, 3}, {2, 2, 2}}) {
        Graph x = family_x_member(legs);
        auto p = sq::find_pattern(x, sq::PatternKind::FamilyX);
        REQUIRE(p.has_value());
        CHECK(sq::validate_pattern(x, *p));
        CHECK(static_cast<int>(p->vertices.size()) == x.num_vertices());
    }
}

TEST_CASE("pattern predicates agree with the embedding oracle") {
    std::mt19937 rng(31337);
    Graph sk13 = subdivided_star(3), sk15 = subdivided_star(5);
    int f_hits = 0, x_hits = 0;
    for (int rep = 0; rep < 160; ++rep) {
        Graph t;
        if (rep % 16 == 7) {  // seed hosts big enough to hold FamilyF
            t = family_f_member(1 + static_cast<int>(rng() % 2));
            for (int extra = 0; extra < 2; ++extra) {
                int host = static_cast<int>(rng() % t.num_vertices());
                int leaf = t.add_vertex();
                t.add_edge(host, leaf);
            }
        } else if (rep % 16 == 15) {  // and for FamilyX
            t = family_x_member({1, 1, 1 + static_cast<int>(rng() % 2)});
            for (int extra = 0; extra < 2; ++extra) {
                int host = static_cast<int>(rng() % t.num_vertices());
                int leaf = t.add_vertex();
                t.add_edge(host, leaf);
            }
        } else {
            int n = 6 + static_cast<int>(rng() % 13);  // up to 18
            t = testutil::random_tree(n, 2 + static_cast<int>(rng() % 4), rng);
        }
        CHECK(sq::find_pattern(t, sq::PatternKind::SK13).has_value() == embeds(t, sk13));
        CHECK(sq::find_pattern(t, sq::PatternKind::SK15).has_value() == embeds(t, sk15));
        bool f_pred = sq::find_pattern(t, sq::PatternKind::FamilyF).has_value();
        bool x_pred = sq::find_pattern(t, sq::PatternKind::FamilyX).has_value();
        CHECK(f_pred == contains_family_f_oracle(t));
        CHECK(x_pred == contains_family_x_oracle(t));
        f_hits += f_pred;
        x_hits += x_pred;
    }
    // The random hosts must actually exercise the families.
    CHECK(f_hits > 0);
    CHECK(x_hits > 0);
}

TEST_CASE("square verdict knowns") {
    Graph bct2 = generators::balanced_cubic_tree(2);
    CHECK(!sq::square_is_hamiltonian(bct2));
    CHECK(sq::square_has_hamilton_path(bct2));
    Graph bct3 = generators::balanced_cubic_tree(3);
    CHECK(!sq::square_is_hamiltonian(bct3));
    CHECK(!sq::square_has_hamilton_path(bct3));
    CHECK(sq::square_is_hamiltonian(path_graph(6)));
    CHECK(sq::square_has_hamilton_path(path_graph(6)));
}

TEST_CASE("square structure report knowns") {
    auto r1 = sq::square_structure_report(star_graph(4));  // K_{1,4}
    CHECK(r1.chordal);
    CHECK(!r1.planar);
    auto r2 = sq::square_structure_report(generators::balanced_cubic_tree(4));
    CHECK(r2.chordal);
    CHECK(r2.planar);
    auto r3 = sq::square_structure_report(path_graph(2));
    CHECK(r3.chordal);
    CHECK(r3.planar);
}

TEST_CASE("characterization equals exact square verdicts, exhaustive to 12") {
    for (int n = 3; n <= 12; ++n)
        testutil::all_trees_up_to_iso(n, [&](const Graph& t) {
            auto [cyc, pth] = square_dp_verdicts(t);
            CHECK(sq::square_is_hamiltonian(t) == cyc);
            CHECK(sq::square_has_hamilton_path(t) == pth);
            auto rep = sq::square_structure_report(t);
            CHECK(rep.chordal);
        });
}

TEST_CASE("characterization equals DP verdicts on 500 random bounded trees") {
    std::mt19937 rng(2025);
    int negative_path = 0;
    for (int rep = 0; rep < 500; ++rep) {
        int n = 8 + static_cast<int>(rng() % 18);  // up to 25
        Graph t = testutil::random_tree(n, 4, rng);
        auto [cyc, pth] = square_dp_verdicts(t);
        CHECK(sq::square_is_hamiltonian(t) == cyc);
        CHECK(sq::square_has_hamilton_path(t) == pth);
        negative_path += !pth;
    }
    CHECK(negative_path > 10);
}
