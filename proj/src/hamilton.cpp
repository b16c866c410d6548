#include "toughtree/hamilton.hpp"

#include <algorithm>
#include <string>

#include "toughtree/core.hpp"

namespace toughtree::hamilton {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw PreconditionError("precondition violated: " + what);
}

std::vector<int> live_neighbors(const Graph& g, const std::vector<char>& alive, int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
        if (alive[w]) out.push_back(w);
    return out;
}

int live_count(const std::vector<char>& alive) {
    return static_cast<int>(std::count(alive.begin(), alive.end(), char(1)));
}

/// Twigs of the subgraph induced by `alive`, assumed to be a k-tree.
std::vector<Twig> live_twigs(const Graph& g, const std::vector<char>& alive, int k) {
    std::vector<Twig> out;
    int n_live = live_count(alive);
    std::vector<int> deg(g.num_vertices(), -1);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (alive[v]) deg[v] = static_cast<int>(live_neighbors(g, alive, v).size());
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!alive[v] || deg[v] == n_live - 1) continue;  // dead or universal
        Twig t;
        t.v = v;
        for (int w : live_neighbors(g, alive, v))
            (deg[w] == k ? t.bud : t.rest).push_back(w);
        if (t.bud.empty() || static_cast<int>(t.rest.size()) != k) continue;
        if (!g.is_clique(t.rest)) continue;
        out.push_back(std::move(t));
    }
    return out;
}

/// Lexicographically least Hamilton path from `from` to `to` through exactly
/// the vertices of `verts` (adjacency taken from g). Empty when none exists.
std::vector<int> lex_ham_path(const Graph& g, const std::vector<int>& verts, int from, int to) {
    std::vector<int> vs = verts;
    std::sort(vs.begin(), vs.end());
    std::vector<char> used(g.num_vertices(), 0);
    std::vector<int> seq{from};
    used[from] = 1;
    auto dfs = [&](auto&& self) -> bool {
        if (static_cast<int>(seq.size()) == static_cast<int>(vs.size())) return seq.back() == to;
        for (int w : vs) {
            if (used[w] || !g.has_edge(seq.back(), w)) continue;
            if (w == to && seq.size() + 1 != vs.size()) continue;
            used[w] = 1;
            seq.push_back(w);
            if (self(self)) return true;
            seq.pop_back();
            used[w] = 0;
        }
        return false;
    };
    if (from == to || !std::binary_search(vs.begin(), vs.end(), from) ||
        !std::binary_search(vs.begin(), vs.end(), to))
        return {};
    if (!dfs(dfs)) return {};
    return seq;
}

/// Lexicographically least Hamilton cycle of the subgraph induced by `verts`.
std::vector<int> lex_ham_cycle(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> vs = verts;
    std::sort(vs.begin(), vs.end());
    if (vs.size() < 3) return {};
    int start = vs.front();
    std::vector<char> used(g.num_vertices(), 0);
    std::vector<int> seq{start};
    used[start] = 1;
    auto dfs = [&](auto&& self) -> bool {
        if (seq.size() == vs.size()) return g.has_edge(seq.back(), start);
        for (int w : vs) {
            if (used[w] || !g.has_edge(seq.back(), w)) continue;
            used[w] = 1;
            seq.push_back(w);
            if (self(self)) return true;
            seq.pop_back();
            used[w] = 0;
        }
        return false;
    };
    if (!dfs(dfs)) return {};
    return seq;
}

/// Replaces the segment u, v, w around interior (or cycle) vertex v by a
/// local Hamilton path through {u, v, w} + S.
void splice_sequence(const Graph& g, std::vector<int>& seq, bool cyclic, int v,
                     const std::vector<int>& S) {
    auto it = std::find(seq.begin(), seq.end(), v);
    if (it == seq.end()) fail("squeeze vertex not on the path");
    int pos = static_cast<int>(it - seq.begin());
    int n = static_cast<int>(seq.size());
    if (!cyclic && (pos == 0 || pos == n - 1)) fail("squeeze vertex is a path endpoint");
    int u = seq[(pos - 1 + n) % n];
    int w = seq[(pos + 1) % n];
    std::vector<int> local{u, v, w};
    local.insert(local.end(), S.begin(), S.end());
    std::vector<int> rep = lex_ham_path(g, local, u, w);
    if (rep.empty()) fail("no local Hamilton path through the squeeze");
    // Replace u, v, w in order; rotate cyclic sequences so v sits inside.
    if (cyclic) {
        std::rotate(seq.begin(), seq.begin() + (pos - 1 + n) % n, seq.end());
        pos = 1;
    }
    std::vector<int> out(seq.begin(), seq.begin() + pos - 1);
    out.insert(out.end(), rep.begin(), rep.end());
    out.insert(out.end(), seq.begin() + pos + 2, seq.end());
    seq = std::move(out);
}

void check_ktree(const Graph& g, int k) {
    if (!core::recognize_ktree(g, k))
        throw std::invalid_argument("graph is not a " + std::to_string(k) + "-tree");
}

/// First (ascending) spanner between x1 and x2 in the subgraph induced by
/// `verts`: interior vertices distributed over three nonempty path segments.
std::array<std::vector<int>, 3> brute_spanner(const Graph& g, const std::vector<int>& verts,
                                              int x1, int x2, bool& ok) {
    std::vector<int> mid;
    for (int v : verts)
        if (v != x1 && v != x2) mid.push_back(v);
    std::sort(mid.begin(), mid.end());
    int m = static_cast<int>(mid.size());
    ok = false;
    std::array<std::vector<int>, 3> best{};
    if (m < 3) return best;
    do {
        for (int i = 1; i + 1 < m && !ok; ++i)
            for (int j = i + 1; j < m && !ok; ++j) {
                std::array<std::pair<int, int>, 3> seg{{{0, i}, {i, j}, {j, m}}};
                bool good = true;
                for (auto [a, b] : seg) {
                    if (!g.has_edge(x1, mid[a]) || !g.has_edge(mid[b - 1], x2)) good = false;
                    for (int t = a; good && t + 1 < b; ++t)
                        if (!g.has_edge(mid[t], mid[t + 1])) good = false;
                    if (!good) break;
                }
                if (!good) continue;
                for (int p = 0; p < 3; ++p) {
                    auto [a, b] = seg[p];
                    best[p].assign(1, x1);
                    best[p].insert(best[p].end(), mid.begin() + a, mid.begin() + b);
                    best[p].push_back(x2);
                }
                ok = true;
            }
    } while (!ok && std::next_permutation(mid.begin(), mid.end()));
    return best;
}

struct SpannerAction {
    bool reroot = false;
    int v = -1;             // twig vertex
    std::vector<int> bud;   // peeled set
    int side = 1;           // reroot: 1 = x1 end, 2 = x2 end
    int x_old = -1;         // reroot: endpoint absorbed into the bud
};

void flip(ThetaSpanner& sp) {
    std::swap(sp.x1, sp.x2);
    for (auto& p : sp.paths) std::reverse(p.begin(), p.end());
}

/// Undo one re-rooting step at the x1 end: the current spanner runs from the
/// twig vertex `v`; restore the peeled bud (containing x_old) and move the
/// endpoint back to x_old.
void apply_reroot_front(const Graph& g, ThetaSpanner& sp, int v, int x_old,
                        const std::vector<int>& bud) {
    if (sp.x1 != v) fail("re-rooted spanner does not start at the twig");
    std::array<int, 3> nb{};
    for (int p = 0; p < 3; ++p) nb[p] = sp.paths[p][1];
    int yi = -1;
    for (int p = 0; p < 3; ++p)
        if (g.has_edge(nb[p], x_old) && (yi < 0 || nb[p] < nb[yi])) yi = p;
    if (yi < 0) fail("restored endpoint has no edge into the spanner");
    int ai = (yi + 1) % 3, bi = (yi + 2) % 3;
    if (nb[bi] < nb[ai]) std::swap(ai, bi);
    std::vector<int> local{nb[ai], v, nb[bi]};
    local.insert(local.end(), bud.begin(), bud.end());
    std::vector<int> ext = lex_ham_path(g, local, nb[ai], nb[bi]);
    if (ext.empty()) fail("no local Hamilton path through the re-rooting bud");
    auto mid = std::find(ext.begin(), ext.end(), x_old);
    if (mid == ext.end()) fail("restored endpoint missing from the local path");
    std::vector<int> seg_a(ext.begin(), mid + 1);
    std::reverse(seg_a.begin(), seg_a.end());  // x_old .. nb[ai]
    std::vector<int> seg_b(mid, ext.end());    // x_old .. nb[bi]
    ThetaSpanner out;
    out.x1 = x_old;
    out.x2 = sp.x2;
    out.paths[0] = seg_a;
    out.paths[0].insert(out.paths[0].end(), sp.paths[ai].begin() + 2, sp.paths[ai].end());
    out.paths[1] = seg_b;
    out.paths[1].insert(out.paths[1].end(), sp.paths[bi].begin() + 2, sp.paths[bi].end());
    out.paths[2] = {x_old, nb[yi]};
    out.paths[2].insert(out.paths[2].end(), sp.paths[yi].begin() + 2, sp.paths[yi].end());
    std::sort(out.paths.begin(), out.paths.end());
    sp = std::move(out);
}

ThetaSpanner theta_spanner_live(const Graph& g, std::vector<char> alive, int k, int x1, int x2) {
    int cx1 = x1, cx2 = x2;
    std::vector<SpannerAction> actions;
    while (live_count(alive) > k + 3) {
        auto twigs = live_twigs(g, alive, k);
        const Twig* pick = nullptr;
        int side = 0;
        for (const auto& t : twigs) {  // prefer buds avoiding both endpoints
            bool has1 = std::find(t.bud.begin(), t.bud.end(), cx1) != t.bud.end();
            bool has2 = std::find(t.bud.begin(), t.bud.end(), cx2) != t.bud.end();
            if (!has1 && !has2) {
                pick = &t;
                side = 0;
                break;
            }
            if (!pick && has1 != has2) {
                pick = &t;
                side = has1 ? 1 : 2;
            }
        }
        if (!pick) fail("no usable twig while building the spanner");
        SpannerAction act;
        act.v = pick->v;
        act.bud = pick->bud;
        if (side == 0) {
            if (act.bud.size() > 2) fail("twig bud is not a squeeze");
            for (int s : act.bud) alive[s] = 0;
        } else {
            act.reroot = true;
            act.side = side;
            act.x_old = side == 1 ? cx1 : cx2;
            for (int s : act.bud) alive[s] = 0;
            (side == 1 ? cx1 : cx2) = pick->v;
        }
        actions.push_back(std::move(act));
    }
    std::vector<int> verts;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (alive[v]) verts.push_back(v);
    bool ok = false;
    ThetaSpanner sp;
    sp.x1 = cx1;
    sp.x2 = cx2;
    sp.paths = brute_spanner(g, verts, cx1, cx2, ok);
    if (!ok) fail("base graph admits no spanner");
    for (auto it = actions.rbegin(); it != actions.rend(); ++it) {
        if (!it->reroot) {
            int p = 0;
            while (p < 3 && std::find(sp.paths[p].begin(), sp.paths[p].end(), it->v) ==
                                sp.paths[p].end())
                ++p;
            if (p == 3) fail("twig vertex missing from the spanner");
            splice_sequence(g, sp.paths[p], false, it->v, it->bud);
        } else if (it->side == 1) {
            apply_reroot_front(g, sp, it->v, it->x_old, it->bud);
        } else {
            flip(sp);
            apply_reroot_front(g, sp, it->v, it->x_old, it->bud);
            flip(sp);
        }
    }
    return sp;
}

/// Ordered joining of path atoms (spanner interiors, orientable) and
/// singleton atoms into one sequence whose head neighbors x1 and whose tail
/// neighbors x2. Depth-first, smallest head first.
std::vector<int> assemble_atoms(const Graph& g, std::vector<std::vector<int>> atoms, int x1,
                                int x2) {
    std::sort(atoms.begin(), atoms.end());
    int m = static_cast<int>(atoms.size());
    std::vector<char> used(m, 0);
    std::vector<int> seq;
    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == m) return g.has_edge(seq.back(), x2);
        for (int i = 0; i < m; ++i) {
            if (used[i]) continue;
            for (int dir = 0; dir < (atoms[i].size() > 1 ? 2 : 1); ++dir) {
                std::vector<int> a = atoms[i];
                if (dir) std::reverse(a.begin(), a.end());
                int head = a.front();
                if (depth == 0 ? !g.has_edge(x1, head) : !g.has_edge(seq.back(), head)) continue;
                used[i] = 1;
                size_t mark = seq.size();
                seq.insert(seq.end(), a.begin(), a.end());
                if (self(self, depth + 1)) return true;
                seq.resize(mark);
                used[i] = 0;
            }
        }
        return false;
    };
    if (!dfs(dfs, 0)) return {};
    return seq;
}

struct PathEvent {
    bool attach = false;
    int v = -1;             // splice: interior vertex; attach: restored endpoint
    std::vector<int> bud;   // splice only
    bool front = false;     // attach only
};

}  // namespace

std::vector<Twig> find_twigs(const Graph& g, int k) {
    check_ktree(g, k);
    std::vector<char> alive(g.num_vertices(), 1);
    return live_twigs(g, alive, k);
}

bool is_squeeze(const Graph& g, int v, const std::vector<int>& S) {
    if (S.empty() || S.size() > 2) return false;
    for (int s : S)
        if (!g.has_edge(v, s)) return false;
    std::vector<int> R;
    for (int w : g.neighbors(v))
        if (std::find(S.begin(), S.end(), w) == S.end()) R.push_back(w);
    if (R.size() < 2) return false;
    for (int s : S) {
        int hits = 0;
        for (int r : R) hits += g.has_edge(s, r);
        if (hits + 1 < static_cast<int>(R.size())) return false;
    }
    for (int r : R) {
        int hits = 0;
        for (int s : S) hits += g.has_edge(r, s);
        if (hits + 1 < static_cast<int>(S.size())) return false;
    }
    return true;
}

PathWitness extend_path_with_squeeze(const Graph& g, const PathWitness& path, int v,
                                     const std::vector<int>& S) {
    for (int s : S)
        if (std::find(path.seq.begin(), path.seq.end(), s) != path.seq.end())
            fail("squeeze intersects the path");
    if (!is_squeeze(g, v, S)) fail("set is not a squeeze of the given vertex");
    PathWitness out = path;
    splice_sequence(g, out.seq, out.cyclic, v, S);
    return out;
}

std::optional<std::pair<Twig, Twig>> find_two_nonadjacent_twigs(const Graph& g, int k) {
    auto twigs = find_twigs(g, k);
    for (size_t i = 0; i < twigs.size(); ++i)
        for (size_t j = i + 1; j < twigs.size(); ++j) {
            if (g.has_edge(twigs[i].v, twigs[j].v)) continue;
            bool disjoint = true;
            for (int s : twigs[i].bud)
                if (std::find(twigs[j].bud.begin(), twigs[j].bud.end(), s) !=
                    twigs[j].bud.end())
                    disjoint = false;
            if (disjoint) return std::make_pair(twigs[i], twigs[j]);
        }
    return std::nullopt;
}

bool validate_theta_spanner(const Graph& g, const ThetaSpanner& sp) {
    if (sp.x1 == sp.x2 || sp.x1 < 0 || sp.x2 < 0) return false;
    std::vector<int> seen(g.num_vertices(), 0);
    for (const auto& p : sp.paths) {
        if (p.size() < 3 || p.front() != sp.x1 || p.back() != sp.x2) return false;
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1])) return false;
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (p[i] == sp.x1 || p[i] == sp.x2) return false;
            if (seen[p[i]]++) return false;  // interiors pairwise disjoint
        }
    }
    int covered = 2;
    for (int v = 0; v < g.num_vertices(); ++v) covered += seen[v] > 0;
    return covered == g.num_vertices();
}

ThetaSpanner theta_spanner(const Graph& g, int k, int x1, int x2) {
    if (k < 3) fail("spanner construction needs k >= 3");
    check_ktree(g, k);
    int n = g.num_vertices();
    if (n == 4) fail("spanner construction excludes K_4");
    if (x1 == x2 || x1 < 0 || x2 < 0 || x1 >= n || x2 >= n) fail("endpoints must be distinct vertices");
    if (g.degree(x1) != k || g.degree(x2) != k) fail("endpoints must have degree k");
    return theta_spanner_live(g, std::vector<char>(n, 1), k, x1, x2);
}

PathWitness hamilton_cycle(const Graph& g, int k) {
    if (k < 2) fail("cycle construction needs k >= 2");
    check_ktree(g, k);
    if (g.num_vertices() < 3) fail("graph has no cycle");
    std::vector<char> alive(g.num_vertices(), 1);
    std::vector<PathEvent> events;
    while (live_count(alive) > k + 2) {
        auto twigs = live_twigs(g, alive, k);
        if (twigs.empty()) fail("no twig while building the cycle");
        const Twig& t = twigs.front();
        if (t.bud.size() > 2) fail("twig bud is not a squeeze");
        events.push_back({false, t.v, t.bud, false});
        for (int s : t.bud) alive[s] = 0;
    }
    std::vector<int> verts;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (alive[v]) verts.push_back(v);
    PathWitness w;
    w.cyclic = true;
    w.seq = lex_ham_cycle(g, verts);
    if (w.seq.empty()) fail("base graph admits no Hamilton cycle");
    for (auto it = events.rbegin(); it != events.rend(); ++it)
        splice_sequence(g, w.seq, true, it->v, it->bud);
    return w;
}

PathWitness hamilton_path_between(const Graph& g, int k, int x1, int x2) {
    if (k < 3) fail("path construction needs k >= 3");
    check_ktree(g, k);
    int n = g.num_vertices();
    if (x1 == x2 || x1 < 0 || x2 < 0 || x1 >= n || x2 >= n) fail("endpoints must be distinct vertices");
    std::vector<char> alive(n, 1);
    int cx1 = x1, cx2 = x2;
    std::vector<PathEvent> events;
    PathWitness w;
    while (true) {
        if (live_count(alive) <= k + 3) {
            std::vector<int> verts;
            for (int v = 0; v < n; ++v)
                if (alive[v]) verts.push_back(v);
            w.seq = lex_ham_path(g, verts, cx1, cx2);
            if (w.seq.empty()) fail("base graph admits no Hamilton path between the endpoints");
            break;
        }
        auto twigs = live_twigs(g, alive, k);
        const Twig* pick = nullptr;
        int side = 0;  // 0: peel bud; 1: bud holds cx1; 2: bud holds cx2
        for (const auto& t : twigs) {
            if (t.v == cx1 || t.v == cx2) continue;
            bool has1 = std::find(t.bud.begin(), t.bud.end(), cx1) != t.bud.end();
            bool has2 = std::find(t.bud.begin(), t.bud.end(), cx2) != t.bud.end();
            if (!has1 && !has2) {
                pick = &t;
                side = 0;
                break;
            }
            if (!pick && has1 != has2) {
                pick = &t;
                side = has1 ? 1 : 2;
            }
        }
        if (pick) {
            if (side == 0) {
                if (pick->bud.size() > 2) fail("twig bud is not a squeeze");
                events.push_back({false, pick->v, pick->bud, false});
                for (int s : pick->bud) alive[s] = 0;
            } else if (side == 2) {
                // Hamilton path from cx1 to the twig without cx2, then append it.
                events.push_back({true, cx2, {}, false});
                alive[cx2] = 0;
                cx2 = pick->v;
            } else {
                events.push_back({true, cx1, {}, true});
                alive[cx1] = 0;
                cx1 = pick->v;
            }
            continue;
        }
        // Both endpoints must now be twigs; bridge them with a spanner.
        const Twig *t1 = nullptr, *t2 = nullptr;
        for (const auto& t : twigs) {
            if (t.v == cx1) t1 = &t;
            if (t.v == cx2) t2 = &t;
        }
        if (!t1 || !t2) fail("endpoints are not both twigs at the join step");
        if (g.has_edge(cx1, cx2)) fail("endpoint twigs are adjacent at the join step");
        for (int s : t1->bud)
            if (std::find(t2->bud.begin(), t2->bud.end(), s) != t2->bud.end())
                fail("endpoint buds intersect at the join step");
        std::vector<char> inner = alive;
        for (int s : t1->bud) inner[s] = 0;
        for (int s : t2->bud) inner[s] = 0;
        ThetaSpanner sp = theta_spanner_live(g, inner, k, cx1, cx2);
        std::vector<std::vector<int>> atoms;
        for (const auto& p : sp.paths)
            atoms.emplace_back(p.begin() + 1, p.end() - 1);
        for (int s : t1->bud) atoms.push_back({s});
        for (int s : t2->bud) atoms.push_back({s});
        std::vector<int> joined = assemble_atoms(g, std::move(atoms), cx1, cx2);
        if (joined.empty()) fail("spanner atoms admit no joining order");
        w.seq.assign(1, cx1);
        w.seq.insert(w.seq.end(), joined.begin(), joined.end());
        w.seq.push_back(cx2);
        break;
    }
    for (auto it = events.rbegin(); it != events.rend(); ++it) {
        if (!it->attach) {
            splice_sequence(g, w.seq, false, it->v, it->bud);
        } else if (it->front) {
            if (!g.has_edge(it->v, w.seq.front())) fail("restored endpoint lost its edge");
            w.seq.insert(w.seq.begin(), it->v);
        } else {
            if (!g.has_edge(it->v, w.seq.back())) fail("restored endpoint lost its edge");
            w.seq.push_back(it->v);
        }
    }
    return w;
}

}  // namespace toughtree::hamilton
