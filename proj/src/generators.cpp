#include "toughtree/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "toughtree/core.hpp"
#include "toughtree/twdp.hpp"

namespace toughtree::generators {

Graph basic_3twig(int k) {
    if (k < 2) throw std::invalid_argument("basic_3twig needs k >= 2");
    Graph g(k + 4);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j < i; ++j) g.add_edge(i, j);
    // Three K_k subgraphs of K_{k+1}: omit vertex 0, 1, 2 respectively.
    for (int t = 0; t < 3; ++t) {
        int w = k + 1 + t;
        for (int i = 0; i <= k; ++i)
            if (i != t) g.add_edge(w, i);
        g.set_label(w, "white");
    }
    return g;
}

namespace {

// Vertex ids equal insertion order: 0,1,2 = outer triangle (the polygon
// vertices v30, v1, v2), 3 = apex, then the rest of the 30-gon, the ten copy
// apexes d_1..d_10, and the 30 white vertices.
struct H0Layout {
    Graph g{71};
    int pv[31];  // polygon vertex v_i -> id (1-based i)
    int apex = 3;
    int d[11];   // copy apex d_t -> id (1-based t)
};

H0Layout make_h0() {
    H0Layout L;
    Graph& g = L.g;
    L.pv[30] = 0;
    L.pv[1] = 1;
    L.pv[2] = 2;
    int id = 4;
    for (int t = 1; t <= 9; ++t) L.pv[3 * t] = id++;
    for (int t = 1; t <= 9; ++t) {
        L.pv[3 * t + 2] = id++;
        L.pv[3 * t + 1] = id++;
    }
    // Polygon.
    for (int i = 1; i < 30; ++i) g.add_edge(L.pv[i], L.pv[i + 1]);
    g.add_edge(L.pv[30], L.pv[1]);
    // Triangulation chords: hub fan from v30, the chain along v3,v6,...,v27,
    // and one short chord per quadrilateral.
    g.add_edge(L.pv[30], L.pv[2]);
    for (int t = 1; t <= 9; ++t) g.add_edge(L.pv[30], L.pv[3 * t]);
    for (int t = 1; t <= 8; ++t) g.add_edge(L.pv[3 * t], L.pv[3 * t + 3]);
    for (int t = 1; t <= 9; ++t) g.add_edge(L.pv[3 * t], L.pv[3 * t + 2]);
    // Apex over the whole polygon.
    for (int i = 1; i <= 30; ++i) g.add_edge(L.apex, L.pv[i]);
    // Copy t sits on the spoke face (v_{3t-2}, v_{3t-1}, apex).
    for (int t = 1; t <= 10; ++t) {
        int a = L.pv[3 * t - 2], b = L.pv[3 * t - 1];
        int dt = 30 + t;  // ids 31..40
        L.d[t] = dt;
        g.add_edge(dt, a);
        g.add_edge(dt, b);
        g.add_edge(dt, L.apex);
        int w1 = 41 + 3 * (t - 1), w2 = w1 + 1, w3 = w1 + 2;
        g.add_edge(w1, a);
        g.add_edge(w1, b);
        g.add_edge(w1, dt);
        g.add_edge(w2, b);
        g.add_edge(w2, L.apex);
        g.add_edge(w2, dt);
        g.add_edge(w3, a);
        g.add_edge(w3, L.apex);
        g.add_edge(w3, dt);
        g.set_label(w1, "white");
        g.set_label(w2, "white");
        g.set_label(w3, "white");
    }
    for (int v = 0; v < 71; ++v)
        if (g.label(v).empty()) g.set_label(v, "u" + std::to_string(v + 1));
    return L;
}

}  // namespace

Graph build_H0() { return make_h0().g; }

Graph build_H0_plus() {
    Graph g = build_H0();
    int x = g.add_vertex();
    for (int v : {0, 1, 2}) g.add_edge(x, v);
    g.set_label(x, "x");
    return g;
}

H0Report validate_H0(const Graph& g) {
    H0Report rep;
    int n = g.num_vertices();
    rep.add("vertex count 71", n == 71);

    auto cert = core::recognize_ktree(g, 3);
    rep.add("3-tree", cert.has_value());
    rep.add("planar (triangle criterion)", cert && core::is_planar_3tree(g, *cert));

    std::vector<int> whites;
    bool whites_simplicial = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 3) {
            whites.push_back(v);
            if (!g.is_clique(g.neighbors(v))) whites_simplicial = false;
        }
    bool indep = true;
    for (int a : whites)
        for (int b : whites)
            if (a < b && g.has_edge(a, b)) indep = false;
    rep.add("30 simplicial degree-3 whites",
            whites.size() == 30 && whites_simplicial && indep);
    if (!rep.pass) return rep;  // remaining checks assume the structure

    rep.add("toughness exactly 1", twdp::toughness_exact(g).value == Rational(1, 1));
    rep.add("longest cycle 63", twdp::longest_cycle(g).value == 63);
    rep.add("longest path 65", twdp::longest_path(g).value == 65);

    std::vector<int> wonly(n, 0);
    std::vector<char> special(n, 0);
    for (int v : whites) {
        wonly[v] = 1;
        special[v] = 1;
    }
    rep.add("max whites on a cycle = 22", twdp::longest_cycle(g, &wonly).value == 22);
    rep.add("max whites on a path = 24", twdp::longest_path(g, &wonly).value == 24);
    auto split = twdp::max_weight_path_by_special_ends(g, wonly, special);
    bool zbound = true;
    for (int z = 0; z <= 2; ++z)
        if (split[z] > 22 + z) zbound = false;
    rep.add("whites on a path <= 22 + z (z white ends)", zbound);
    return rep;
}

Graph expand_Hn(const Graph& prev) {
    std::vector<int> whites = prev.vertices_with_label("white");
    if (whites.empty()) throw std::invalid_argument("expand_Hn: no white vertices");
    std::vector<char> is_white(prev.num_vertices(), 0);
    for (int w : whites) is_white[w] = 1;

    Graph h0 = build_H0();
    int hosts = 0;
    std::vector<int> remap(prev.num_vertices(), -1);
    for (int v = 0; v < prev.num_vertices(); ++v)
        if (!is_white[v]) remap[v] = hosts++;
    Graph g(hosts + 71 * static_cast<int>(whites.size()));
    for (auto [u, v] : prev.edges())
        if (!is_white[u] && !is_white[v]) g.add_edge(remap[u], remap[v]);
    for (int v = 0; v < prev.num_vertices(); ++v)
        if (!is_white[v] && !prev.label(v).empty() && prev.label(v) != "white")
            g.set_label(remap[v], prev.label(v));

    int base = hosts;
    for (int w : whites) {
        std::vector<int> nb;  // ascending
        for (int x : prev.neighbors(w)) nb.push_back(remap[x]);
        std::sort(nb.begin(), nb.end());
        // Copy internal edges, then the 3/2/1 cross attachment for the
        // outer triangle (each insertion stays simplicial with 3 earlier
        // neighbours).
        for (auto [u, v] : h0.edges()) g.add_edge(base + u, base + v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (int o = 0; o + i < 3; ++o) g.add_edge(base + o, nb[i]);
        for (int v = 0; v < 71; ++v) {
            if (h0.label(v) == "white")
                g.set_label(base + v, "white");
            else
                g.set_label(base + v, "w" + std::to_string(w) + "." + h0.label(v));
        }
        base += 71;
    }
    return g;
}

Graph build_Hn(int level) {
    if (level < 0) throw std::invalid_argument("build_Hn: level >= 0");
    Graph g = build_H0();
    for (int i = 0; i < level; ++i) g = expand_Hn(g);
    return g;
}

Graph add_universal(const Graph& g, int m) {
    Graph out = g;
    for (int i = 0; i < m; ++i) {
        int u = out.add_vertex();
        for (int v = 0; v < u; ++v) out.add_edge(u, v);
        out.set_label(u, "universal" + std::to_string(i + 1));
    }
    return out;
}

Graph build_Hnk(int level, int k) {
    if (k < 4) throw std::invalid_argument("build_Hnk: k >= 4");
    return add_universal(build_Hn(level), k - 3);
}

Graph balanced_cubic_tree(int r) {
    if (r < 1) throw std::invalid_argument("balanced_cubic_tree: r >= 1");
    int n = 3 * (1 << r) - 2;
    Graph g(n);
    int id = 1;
    std::vector<int> frontier;
    for (int i = 0; i < 3; ++i) {
        g.add_edge(0, id);
        frontier.push_back(id++);
    }
    for (int depth = 2; depth <= r; ++depth) {
        std::vector<int> next;
        for (int p : frontier)
            for (int c = 0; c < 2; ++c) {
                g.add_edge(p, id);
                next.push_back(id++);
            }
        frontier = std::move(next);
    }
    return g;
}

Graph square(const Graph& g) {
    int n = g.num_vertices();
    Graph out(n);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) {
            if (u > v) out.add_edge(v, u);
            for (int w : g.neighbors(u))
                if (w > v) out.add_edge(v, w);
        }
        if (!g.label(v).empty()) out.set_label(v, g.label(v));
    }
    return out;
}

bool validate_arranged_block(const ArrangedBlock& b) {
    const Graph& g = b.g0;
    if (b.j != g.num_vertices() || b.k < 1) return false;
    std::vector<char> in_w(g.num_vertices(), 0), in_o(g.num_vertices(), 0);
    for (int v : b.white) {
        if (v < 0 || v >= g.num_vertices() || in_w[v]) return false;
        in_w[v] = 1;
    }
    for (int v : b.outer) {
        if (v < 0 || v >= g.num_vertices() || in_o[v] || in_w[v]) return false;
        in_o[v] = 1;
    }
    for (int v : b.white) {
        if (!g.is_clique(g.neighbors(v))) return false;
        for (int u : g.neighbors(v))
            if (in_w[u]) return false;
    }
    if (!g.is_clique(b.outer)) return false;
    std::vector<int> w(g.num_vertices(), 0);
    for (int v : b.white) w[v] = 1;
    return twdp::longest_cycle(g, &w).value <= b.k;
}

Graph arranged_block_expand(const ArrangedBlock& b, int n) {
    if (!validate_arranged_block(b)) throw std::invalid_argument("invalid arranged block");
    Graph g = b.g0;
    for (int v = 0; v < g.num_vertices(); ++v) g.set_label(v, "");
    for (int v : b.white) g.set_label(v, "white");
    int m = static_cast<int>(b.outer.size());
    std::vector<int> outer_sorted = b.outer;
    std::sort(outer_sorted.begin(), outer_sorted.end());

    for (int level = 0; level < n; ++level) {
        std::vector<int> whites = g.vertices_with_label("white");
        std::vector<char> is_white(g.num_vertices(), 0);
        for (int w : whites) is_white[w] = 1;
        int hosts = 0;
        std::vector<int> remap(g.num_vertices(), -1);
        for (int v = 0; v < g.num_vertices(); ++v)
            if (!is_white[v]) remap[v] = hosts++;
        Graph out(hosts + b.j * static_cast<int>(whites.size()));
        for (auto [u, v] : g.edges())
            if (!is_white[u] && !is_white[v]) out.add_edge(remap[u], remap[v]);
        int base = hosts;
        for (int w : whites) {
            std::vector<int> nb;
            for (int x : g.neighbors(w)) nb.push_back(remap[x]);
            std::sort(nb.begin(), nb.end());
            // Copy g0 with outer vertices first so cross-degrees follow the
            // same descending rule as expand_Hn.
            std::vector<int> order = outer_sorted;
            for (int v = 0; v < b.j; ++v)
                if (!std::binary_search(outer_sorted.begin(), outer_sorted.end(), v))
                    order.push_back(v);
            std::vector<int> local(b.j, -1);
            for (int i = 0; i < b.j; ++i) local[order[i]] = base + i;
            for (auto [u, v] : b.g0.edges()) out.add_edge(local[u], local[v]);
            for (size_t i = 0; i < nb.size(); ++i)
                for (int o = 0; o + static_cast<int>(i) < m; ++o)
                    out.add_edge(base + o, nb[i]);
            for (int v : b.white) out.set_label(local[v], "white");
            base += b.j;
        }
        g = std::move(out);
    }
    return g;
}

std::pair<std::int64_t, std::int64_t> closed_form_bounds(const ArrangedBlock& b, int n) {
    std::int64_t W = static_cast<std::int64_t>(b.white.size());
    std::int64_t ell = b.j - W + b.k;
    std::int64_t geoW = 0, geoK = 0, pw = 1, pk = 1;
    for (int i = 0; i <= n; ++i, pw *= W, pk *= b.k) {
        geoW += pw;
        geoK += pk;
    }
    return {1 + (b.j - 1) * geoW, 1 + (ell - 1) * geoK};
}

FamilyMetrics family_metrics(int n) {
    FamilyMetrics fm;
    fm.n_index = n;
    std::int64_t g30 = 0, g22 = 0, p30 = 1, p22 = 1;
    for (int i = 0; i <= n; ++i, p30 *= 30, p22 *= 22) {
        g30 += p30;
        g22 += p22;
    }
    fm.f = 1 + 70 * g30;
    fm.c = 1 + 62 * g22;
    fm.w = p22 + 2 * g22;  // p22 == 22^{n+1} after the loop
    std::int64_t sum_c = 0, gg = 0, pp = 1;
    for (int i = 0; i < n; ++i, pp *= 22) {
        gg += pp;
        sum_c += 1 + 62 * gg;
    }
    fm.p = fm.c + 2 + 2 * sum_c;
    return fm;
}

}  // namespace toughtree::generators
