#include "toughtree/twdp.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "toughtree/oracles.hpp"

namespace toughtree::twdp {

namespace {

using core::EliminationOrder;

// ---------------------------------------------------------------------------
// Nice decomposition with explicit introduce-edge nodes.
// ---------------------------------------------------------------------------

enum class Kind { Leaf, IntroV, IntroE, Forget, Join };

struct NiceNode {
    Kind kind;
    int v = -1;           // IntroV / Forget vertex
    int eu = -1, ev = -1; // IntroE endpoints
    int c1 = -1, c2 = -1;
    std::vector<int> bag; // sorted
};

struct Nice {
    std::vector<NiceNode> nodes;  // children precede parents
    int root = -1;
};

int bag_pos(const std::vector<int>& bag, int v) {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    assert(it != bag.end() && *it == v);
    return static_cast<int>(it - bag.begin());
}

struct NiceBuilder {
    Nice nice;

    int add(NiceNode n) {
        nice.nodes.push_back(std::move(n));
        return static_cast<int>(nice.nodes.size()) - 1;
    }

    int leaf() { return add({Kind::Leaf, -1, -1, -1, -1, -1, {}}); }

    int intro_v(int child, int v) {
        auto bag = nice.nodes[child].bag;
        bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
        NiceNode n{Kind::IntroV, v, -1, -1, child, -1, std::move(bag)};
        return add(std::move(n));
    }

    int intro_e(int child, int u, int v) {
        NiceNode n{Kind::IntroE, -1, u, v, child, -1, nice.nodes[child].bag};
        return add(std::move(n));
    }

    int forget(int child, int v) {
        auto bag = nice.nodes[child].bag;
        bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
        NiceNode n{Kind::Forget, v, -1, -1, child, -1, std::move(bag)};
        return add(std::move(n));
    }

    int join(int a, int b) {
        assert(nice.nodes[a].bag == nice.nodes[b].bag);
        NiceNode n{Kind::Join, -1, -1, -1, a, b, nice.nodes[a].bag};
        return add(std::move(n));
    }

    // Morph a chain ending at `node` (top bag = from) into top bag = to.
    int rebag(int node, const std::vector<int>& from, const std::vector<int>& to) {
        int cur = node;
        for (int x : from)
            if (!std::binary_search(to.begin(), to.end(), x)) cur = forget(cur, x);
        for (int x : to)
            if (!std::binary_search(from.begin(), from.end(), x)) cur = intro_v(cur, x);
        return cur;
    }
};

// Raw clique-tree skeleton from a prefix-simplicial order.
struct Skeleton {
    EliminationOrder eo;
    std::vector<std::vector<int>> bags;         // bag i for vertex eo[i]
    std::vector<std::vector<int>> children;     // clique-tree children
    std::vector<std::vector<std::pair<int, int>>> edges_at;
};

Skeleton skeleton_from_order(const Graph& g, EliminationOrder eo) {
    int n = g.num_vertices();
    Skeleton sk;
    sk.eo = std::move(eo);
    sk.bags.resize(n);
    sk.children.resize(n);
    sk.edges_at.resize(n);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[sk.eo.order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = sk.eo.order[i];
        std::vector<int> bag{v};
        int parent = (i > 0) ? 0 : -1;
        int best = -1;
        for (int w : g.neighbors(v)) {
            if (pos[w] < i) {
                bag.push_back(w);
                sk.edges_at[i].emplace_back(w, v);
                if (pos[w] > best) {
                    best = pos[w];
                    parent = pos[w];
                }
            }
        }
        std::sort(bag.begin(), bag.end());
        sk.bags[i] = std::move(bag);
        if (parent >= 0) sk.children[parent].push_back(i);
    }
    return sk;
}

Nice build_nice(const Graph& g) {
    auto eo = core::is_chordal(g);
    if (!eo) throw std::invalid_argument("graph is not chordal");
    int n = g.num_vertices();
    NiceBuilder nb;
    if (n == 0) {
        nb.nice.root = nb.leaf();
        return nb.nice;
    }
    Skeleton sk = skeleton_from_order(g, *eo);

    // Iterative post-order over the clique skeleton.
    std::vector<int> done_nice(n, -1);
    std::vector<std::pair<int, int>> stack;  // (node, child cursor)
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        auto& [i, cur] = stack.back();
        if (cur < static_cast<int>(sk.children[i].size())) {
            int c = sk.children[i][cur];
            ++cur;
            stack.emplace_back(c, 0);
            continue;
        }
        // All children processed; assemble this node.
        int acc = -1;
        for (int c : sk.children[i]) {
            int chain = nb.rebag(done_nice[c], sk.bags[c], sk.bags[i]);
            acc = (acc < 0) ? chain : nb.join(acc, chain);
        }
        if (acc < 0) {
            acc = nb.leaf();
            for (int x : sk.bags[i]) acc = nb.intro_v(acc, x);
        }
        for (auto [u, v] : sk.edges_at[i]) acc = nb.intro_e(acc, u, v);
        done_nice[i] = acc;
        stack.pop_back();
    }
    int top = nb.rebag(done_nice[0], sk.bags[0], {});
    nb.nice.root = top;
    return nb.nice;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public clique tree (maximal-clique form).
// ---------------------------------------------------------------------------

CliqueTree clique_tree(const Graph& g) {
    auto eo = core::is_chordal(g);
    if (!eo) throw std::invalid_argument("graph is not chordal");
    int n = g.num_vertices();
    CliqueTree ct;
    if (n == 0) return ct;
    Skeleton sk = skeleton_from_order(g, *eo);

    // Absorb bags contained in a neighbouring bag.
    std::vector<std::vector<int>> bags = sk.bags;
    std::vector<std::vector<int>> nbr(n);
    for (int p = 0; p < n; ++p)
        for (int c : sk.children[p]) {
            nbr[p].push_back(c);
            nbr[c].push_back(p);
        }
    std::vector<char> dead(n, 0);
    bool changed = true;
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    while (changed) {
        changed = false;
        for (int i = 0; i < n && !changed; ++i) {
            if (dead[i]) continue;
            for (int j : nbr[i]) {
                if (dead[j] || !subset(bags[i], bags[j])) continue;
                // Contract i into j.
                dead[i] = 1;
                for (int x : nbr[i])
                    if (x != j && !dead[x]) {
                        nbr[j].push_back(x);
                        nbr[x].push_back(j);
                    }
                changed = true;
                break;
            }
        }
    }
    std::vector<int> idx(n, -1);
    for (int i = 0; i < n; ++i) {
        if (dead[i]) continue;
        idx[i] = static_cast<int>(ct.bags.size());
        ct.bags.push_back(bags[i]);
        ct.width = std::max(ct.width, static_cast<int>(bags[i].size()) - 1);
    }
    for (int i = 0; i < n; ++i) {
        if (dead[i]) continue;
        for (int j : nbr[i])
            if (!dead[j] && i < j) ct.edges.emplace_back(idx[i], idx[j]);
    }
    // Deduplicate tree edges picked up during contraction, then keep a
    // spanning set (contractions can create parallel entries).
    std::sort(ct.edges.begin(), ct.edges.end());
    ct.edges.erase(std::unique(ct.edges.begin(), ct.edges.end()), ct.edges.end());
    // Minimum spanning structure: keep edges that connect new components.
    std::vector<int> uf(ct.bags.size());
    for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    auto find = [&](auto&& self, int x) -> int {
        return uf[x] == x ? x : uf[x] = self(self, uf[x]);
    };
    std::vector<std::pair<int, int>> kept;
    for (auto [a, b] : ct.edges) {
        int ra = find(find, a), rb = find(find, b);
        if (ra != rb) {
            uf[ra] = rb;
            kept.emplace_back(a, b);
        }
    }
    ct.edges = std::move(kept);
    return ct;
}

bool verify_clique_tree(const Graph& g, const CliqueTree& ct) {
    int n = g.num_vertices();
    if (n == 0) return ct.bags.empty();
    int b = static_cast<int>(ct.bags.size());
    if (static_cast<int>(ct.edges.size()) != b - 1) return false;
    // Every vertex and edge covered.
    std::vector<std::vector<int>> holders(n);
    for (int i = 0; i < b; ++i)
        for (int v : ct.bags[i]) {
            if (v < 0 || v >= n) return false;
            holders[v].push_back(i);
        }
    for (int v = 0; v < n; ++v)
        if (holders[v].empty()) return false;
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (int i : holders[u])
            if (std::binary_search(ct.bags[i].begin(), ct.bags[i].end(), v)) ok = true;
        if (!ok) return false;
    }
    // Occurrence subtrees connected: contract holders of v in the tree.
    std::vector<std::vector<int>> adj(b);
    for (auto [a, c] : ct.edges) {
        adj[a].push_back(c);
        adj[c].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<char> in(b, 0);
        for (int i : holders[v]) in[i] = 1;
        std::vector<int> stack{holders[v][0]};
        std::vector<char> seen(b, 0);
        seen[holders[v][0]] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++cnt;
            for (int y : adj[x])
                if (in[y] && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        if (cnt != static_cast<int>(holders[v].size())) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Longest path / cycle DP.
// ---------------------------------------------------------------------------

namespace {

// Per-position nibble codes.
constexpr std::uint64_t OFF = 0, D0 = 1, D2 = 2, HALF = 15;
// 8 + j encodes a degree-1 endpoint paired with bag position j.

constexpr int ENDS_SHIFT = 32, DONE_SHIFT = 34, SPEC_SHIFT = 35;

std::uint64_t getc(std::uint64_t st, int p) { return (st >> (4 * p)) & 0xF; }
std::uint64_t setc(std::uint64_t st, int p, std::uint64_t c) {
    return (st & ~(0xFull << (4 * p))) | (c << (4 * p));
}
int get_ends(std::uint64_t st) { return static_cast<int>((st >> ENDS_SHIFT) & 3); }
std::uint64_t set_ends(std::uint64_t st, int e) {
    return (st & ~(3ull << ENDS_SHIFT)) | (static_cast<std::uint64_t>(e) << ENDS_SHIFT);
}
bool get_done(std::uint64_t st) { return (st >> DONE_SHIFT) & 1; }
std::uint64_t set_done(std::uint64_t st) { return st | (1ull << DONE_SHIFT); }
int get_spec(std::uint64_t st) { return static_cast<int>((st >> SPEC_SHIFT) & 3); }
std::uint64_t set_spec(std::uint64_t st, int s) {
    return (st & ~(3ull << SPEC_SHIFT)) | (static_cast<std::uint64_t>(s) << SPEC_SHIFT);
}
bool is_d1(std::uint64_t c) { return c >= 8; }
int path_deg(std::uint64_t c) { return c == D0 ? 0 : c == D2 ? 2 : is_d1(c) ? 1 : -1; }

// Insert a fresh position p (shift codes and partner indices >= p up).
std::uint64_t shift_in(std::uint64_t st, int s, int p) {
    std::uint64_t out = st & ~0xFFFFFFFFull;  // keep flag bits
    for (int i = s; i > p; --i) {
        std::uint64_t c = getc(st, i - 1);
        if (is_d1(c) && c != HALF) {
            int part = static_cast<int>(c - 8);
            if (part >= p) c = 8 + part + 1;
        }
        out = setc(out, i, c);
    }
    for (int i = 0; i < p; ++i) {
        std::uint64_t c = getc(st, i);
        if (is_d1(c) && c != HALF) {
            int part = static_cast<int>(c - 8);
            if (part >= p) c = 8 + part + 1;
        }
        out = setc(out, i, c);
    }
    return out;  // position p left as OFF
}

// Remove position p (codes above shift down). Caller ensures no partner
// pointer still references p.
std::uint64_t shift_out(std::uint64_t st, int s, int p) {
    std::uint64_t out = st & ~0xFFFFFFFFull;
    for (int i = 0; i < s; ++i) {
        if (i == p) continue;
        std::uint64_t c = getc(st, i);
        if (is_d1(c) && c != HALF) {
            int part = static_cast<int>(c - 8);
            assert(part != p);
            if (part > p) c = 8 + part - 1;
        }
        out = setc(out, i < p ? i : i - 1, c);
    }
    return out;
}

// True iff every position except the listed ones is OFF or D2.
bool rest_closed(std::uint64_t st, int s, int skip1 = -1, int skip2 = -1) {
    for (int i = 0; i < s; ++i) {
        if (i == skip1 || i == skip2) continue;
        std::uint64_t c = getc(st, i);
        if (c != OFF && c != D2) return false;
    }
    return true;
}

struct PathDPOptions {
    bool cycle = false;
    bool must_cover = false;
    const std::vector<char>* allowed_ends = nullptr;
    const std::vector<char>* special = nullptr;
    const std::vector<int>* weight = nullptr;
};

constexpr std::int32_t NEG = std::numeric_limits<std::int32_t>::min() / 4;

using Table = std::unordered_map<std::uint64_t, std::int32_t>;

void relax(Table& t, std::uint64_t st, std::int32_t val) {
    auto [it, fresh] = t.emplace(st, val);
    if (!fresh && it->second < val) it->second = val;
}

struct PathEngine {
    const Graph& g;
    const Nice& nice;
    PathDPOptions opts;
    std::vector<int> w;
    std::vector<char> spec;
    std::vector<Table> tables;

    PathEngine(const Graph& gg, const Nice& nn, PathDPOptions o) : g(gg), nice(nn), opts(o) {
        int n = g.num_vertices();
        w.assign(n, 1);
        if (opts.weight) w = *opts.weight;
        spec.assign(n, 0);
        if (opts.special) spec = *opts.special;
    }

    bool end_allowed(int v) const {
        return !opts.allowed_ends || (*opts.allowed_ends)[v];
    }

    // Forward transitions; `out` collects resulting states.
    void do_leaf(Table& out) { relax(out, 0, 0); }

    void do_intro_v(const NiceNode& nd, const Table& child, Table& out) const {
        int s = static_cast<int>(nd.bag.size());
        int p = bag_pos(nd.bag, nd.v);
        for (auto [st, val] : child) {
            std::uint64_t base = shift_in(st, s - 1, p);
            relax(out, base, val);  // OFF
            if (!get_done(base)) relax(out, setc(base, p, D0), val + w[nd.v]);
        }
    }

    void do_intro_e(const NiceNode& nd, const Table& child, Table& out) const {
        int s = static_cast<int>(nd.bag.size());
        int pu = bag_pos(nd.bag, nd.eu), pv = bag_pos(nd.bag, nd.ev);
        for (auto [st, val] : child) {
            relax(out, st, val);  // unused
            if (get_done(st)) continue;
            std::uint64_t cu = getc(st, pu), cv = getc(st, pv);
            int du = path_deg(cu), dv = path_deg(cv);
            if (du < 0 || du > 1 || dv < 0 || dv > 1) continue;
            if (is_d1(cu) && cu != HALF && static_cast<int>(cu - 8) == pv) {
                // Same segment: close into a cycle.
                if (!opts.cycle) continue;
                std::uint64_t ns = setc(setc(st, pu, D2), pv, D2);
                if (!rest_closed(ns, s)) continue;
                relax(out, set_done(ns), val);
                continue;
            }
            std::uint64_t ns = st;
            if (du == 0 && dv == 0) {
                ns = setc(ns, pu, 8 + pv);
                ns = setc(ns, pv, 8 + pu);
                relax(out, ns, val);
            } else if (du == 1 && dv == 1) {
                std::uint64_t xu = cu, xv = cv;  // partners
                ns = setc(setc(ns, pu, D2), pv, D2);
                if (xu == HALF && xv == HALF) {
                    if (opts.cycle) continue;
                    if (!rest_closed(ns, s)) continue;
                    relax(out, set_done(ns), val);
                } else if (xu == HALF) {
                    ns = setc(ns, static_cast<int>(xv - 8), HALF);
                    relax(out, ns, val);
                } else if (xv == HALF) {
                    ns = setc(ns, static_cast<int>(xu - 8), HALF);
                    relax(out, ns, val);
                } else {
                    int a = static_cast<int>(xu - 8), b = static_cast<int>(xv - 8);
                    ns = setc(ns, a, 8 + b);
                    ns = setc(ns, b, 8 + a);
                    relax(out, ns, val);
                }
            } else {
                // One endpoint D0, the other D1.
                int p0 = du == 0 ? pu : pv;
                int p1 = du == 0 ? pv : pu;
                std::uint64_t x = getc(st, p1);
                ns = setc(ns, p1, D2);
                if (x == HALF) {
                    ns = setc(ns, p0, HALF);
                } else {
                    int a = static_cast<int>(x - 8);
                    ns = setc(ns, p0, 8 + a);
                    ns = setc(ns, a, 8 + p0);
                }
                relax(out, ns, val);
            }
        }
    }

    void do_forget(const NiceNode& nd, const NiceNode& cnd, const Table& child, Table& out) const {
        int s = static_cast<int>(cnd.bag.size());
        int p = bag_pos(cnd.bag, nd.v);
        for (auto [st, val] : child) {
            std::uint64_t c = getc(st, p);
            if (c == OFF) {
                if (opts.must_cover) continue;
                relax(out, shift_out(st, s, p), val);
            } else if (c == D2) {
                relax(out, shift_out(st, s, p), val);
            } else if (c == D0) {
                // Single-vertex path.
                if (opts.cycle || get_done(st) || get_ends(st) != 0) continue;
                if (!end_allowed(nd.v)) continue;
                if (!rest_closed(st, s, p)) continue;
                std::uint64_t ns = set_done(set_ends(st, 2));
                if (spec[nd.v]) ns = set_spec(ns, std::min(get_spec(ns) + 2, 3));
                ns = setc(ns, p, D2);
                relax(out, shift_out(ns, s, p), val);
            } else {
                // D1: finalize one end.
                if (opts.cycle || get_done(st)) continue;
                int e = get_ends(st);
                if (e >= 2) continue;
                if (!end_allowed(nd.v)) continue;
                std::uint64_t ns = set_ends(st, e + 1);
                if (spec[nd.v]) ns = set_spec(ns, std::min(get_spec(ns) + 1, 3));
                if (c == HALF) {
                    ns = setc(ns, p, D2);
                    if (!rest_closed(ns, s)) continue;
                    ns = set_done(ns);
                } else {
                    int part = static_cast<int>(c - 8);
                    ns = setc(ns, part, HALF);
                    ns = setc(ns, p, D2);
                }
                relax(out, shift_out(ns, s, p), val);
            }
        }
    }

    std::uint32_t on_mask(std::uint64_t st, int s) const {
        std::uint32_t m = 0;
        for (int i = 0; i < s; ++i)
            if (getc(st, i) != OFF) m |= 1u << i;
        return m;
    }

    // Merge two join-child states; returns false if incompatible.
    bool merge_states(int s, const std::vector<int>& bag, std::uint64_t a, std::uint64_t b,
                      std::uint64_t& out) const {
        bool da = get_done(a), db = get_done(b);
        if (da && db) return false;
        if (da || db) {
            std::uint64_t d = da ? a : b, o = da ? b : a;
            // The non-done side must be entirely trivial.
            if (get_ends(o) != 0 || get_spec(o) != 0) return false;
            for (int i = 0; i < s; ++i)
                if (getc(o, i) != OFF) return false;
            // The done side may not have on-vertices that the other side
            // also counts; trivial side has none.
            out = d;
            return true;
        }
        int ends = get_ends(a) + get_ends(b);
        if (ends > 2) return false;
        // Degree compatibility and on/off agreement.
        std::array<int, 7> dA{}, dB{};
        for (int i = 0; i < s; ++i) {
            std::uint64_t ca = getc(a, i), cb = getc(b, i);
            if ((ca == OFF) != (cb == OFF)) return false;
            if (ca == OFF) {
                dA[i] = dB[i] = -1;
                continue;
            }
            dA[i] = path_deg(ca);
            dB[i] = path_deg(cb);
            if (dA[i] + dB[i] > 2) return false;
        }
        // Super-edges: endpoints are positions 0..s-1 and FIN tokens s, s+1.
        // Collect each side's D1 pairings once (i < partner) and halves.
        struct Edge {
            int x, y;
        };
        std::vector<Edge> edges;
        int fin = s;
        auto collect = [&](std::uint64_t st) {
            for (int i = 0; i < s; ++i) {
                std::uint64_t c = getc(st, i);
                if (c == HALF) {
                    edges.push_back({i, fin++});
                } else if (is_d1(c)) {
                    int j = static_cast<int>(c - 8);
                    if (i < j) edges.push_back({i, j});
                }
            }
        };
        collect(a);
        collect(b);
        int tot = fin;
        // Edge-indexed adjacency: parallel super-edges are possible (a
        // segment of each side between the same two positions).
        std::vector<std::vector<std::pair<int, int>>> adj(tot);
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            adj[edges[e].x].emplace_back(edges[e].y, e);
            adj[edges[e].y].emplace_back(edges[e].x, e);
        }
        std::vector<char> used(edges.size(), 0);
        std::uint64_t res = 0;
        res = set_ends(res, ends);
        res = set_spec(res, std::min(get_spec(a) + get_spec(b), 3));
        // Default codes.
        for (int i = 0; i < s; ++i) {
            if (dA[i] < 0) {
                res = setc(res, i, OFF);
            } else {
                int d = dA[i] + dB[i];
                res = setc(res, i, d == 0 ? D0 : d == 2 ? D2 : OFF /*fixed later*/);
            }
        }
        bool done_formed = false;
        int done_like = 0;  // completed structures
        auto walk_from = [&](int start) -> int {
            // Follow unused super-edges from `start`; returns the far end.
            int cur = start;
            while (true) {
                int nxt = -1;
                for (auto [y, e] : adj[cur])
                    if (!used[e]) {
                        used[e] = 1;
                        nxt = y;
                        break;
                    }
                if (nxt < 0) return cur;
                cur = nxt;
            }
        };
        for (int v = 0; v < tot; ++v) {
            if (adj[v].size() != 1) continue;
            bool fresh = !used[adj[v][0].second];
            if (!fresh) continue;
            int far = walk_from(v);
            bool f1 = v >= s, f2 = far >= s;
            if (f1 && f2) {
                if (opts.cycle) return false;
                done_formed = true;
                ++done_like;
            } else if (f1 || f2) {
                res = setc(res, f1 ? far : v, HALF);
            } else {
                res = setc(res, v, 8 + far);
                res = setc(res, far, 8 + v);
            }
        }
        // Remaining unused super-edges lie on cycles.
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            if (used[e]) continue;
            if (!opts.cycle) return false;
            done_formed = true;
            ++done_like;
            used[e] = 1;
            walk_from(edges[e].y);
        }
        if (done_like > 1) return false;
        if (done_formed) {
            // Everything else must already be closed.
            for (int i = 0; i < s; ++i) {
                std::uint64_t c = getc(res, i);
                if (c != OFF && c != D2) return false;
            }
            res = set_done(res);
        }
        out = res;
        return true;
    }

    void do_join(const NiceNode& nd, const Table& ta, const Table& tb, Table& out) {
        int s = static_cast<int>(nd.bag.size());
        // Non-done states must agree on the on/off mask; a done state pairs
        // only with the other side's fully trivial state (encoded 0).
        std::unordered_map<std::uint32_t, std::vector<std::pair<std::uint64_t, std::int32_t>>> ba, bb;
        for (auto [st, val] : ta) {
            if (get_done(st)) {
                auto it = tb.find(0);
                if (it != tb.end()) relax(out, st, val + it->second);
                continue;
            }
            ba[on_mask(st, s)].emplace_back(st, val);
        }
        for (auto [st, val] : tb) {
            if (get_done(st)) {
                auto it = ta.find(0);
                if (it != ta.end()) relax(out, st, val + it->second);
                continue;
            }
            bb[on_mask(st, s)].emplace_back(st, val);
        }
        for (auto& [mask, va] : ba) {
            auto it = bb.find(mask);
            if (it == bb.end()) continue;
            int overlap = 0;
            for (int i = 0; i < s; ++i)
                if (mask & (1u << i)) overlap += w[nd.bag[i]];
            for (auto [sa, v1] : va)
                for (auto [sb, v2] : it->second) {
                    std::uint64_t res;
                    if (merge_states(s, nd.bag, sa, sb, res))
                        relax(out, res, v1 + v2 - overlap);
                }
        }
    }

    void run() {
        tables.resize(nice.nodes.size());
        for (size_t i = 0; i < nice.nodes.size(); ++i) {
            const auto& nd = nice.nodes[i];
            switch (nd.kind) {
                case Kind::Leaf: do_leaf(tables[i]); break;
                case Kind::IntroV: do_intro_v(nd, tables[nd.c1], tables[i]); break;
                case Kind::IntroE: do_intro_e(nd, tables[nd.c1], tables[i]); break;
                case Kind::Forget: do_forget(nd, nice.nodes[nd.c1], tables[nd.c1], tables[i]); break;
                case Kind::Join: do_join(nd, tables[nd.c1], tables[nd.c2], tables[i]); break;
            }
        }
    }

    // --- witness reconstruction ------------------------------------------

    struct Trace {
        std::vector<std::pair<int, int>> used_edges;
        std::vector<int> single;  // D0-forget vertex (one-vertex path)
    };

    bool has(int node, std::uint64_t st, std::int32_t val) const {
        auto it = tables[node].find(st);
        return it != tables[node].end() && it->second == val;
    }

    void walk(int node, std::uint64_t st, std::int32_t val, Trace& tr) const {
        const auto& nd = nice.nodes[node];
        switch (nd.kind) {
            case Kind::Leaf:
                return;
            case Kind::IntroV: {
                int s = static_cast<int>(nd.bag.size());
                int p = bag_pos(nd.bag, nd.v);
                std::uint64_t c = getc(st, p);
                // Invert: child state is st with position p removed.
                std::uint64_t cs = shift_out(st, s, p);
                if (c == OFF && has(nd.c1, cs, val)) return walk(nd.c1, cs, val, tr);
                if (c == D0 && has(nd.c1, cs, val - w[nd.v]))
                    return walk(nd.c1, cs, val - w[nd.v], tr);
                assert(false && "introduce trace failed");
                return;
            }
            case Kind::IntroE: {
                if (has(nd.c1, st, val)) return walk(nd.c1, st, val, tr);
                // Must have used the edge: search child states mapping to st.
                for (auto [cst, cval] : tables[nd.c1]) {
                    if (cval != val) continue;
                    Table tmp;
                    Table one{{cst, cval}};
                    do_intro_e(nd, one, tmp);
                    auto it = tmp.find(st);
                    if (it != tmp.end() && it->second == val && cst != st) {
                        tr.used_edges.emplace_back(nd.eu, nd.ev);
                        return walk(nd.c1, cst, cval, tr);
                    }
                }
                assert(false && "edge trace failed");
                return;
            }
            case Kind::Forget: {
                for (auto [cst, cval] : tables[nd.c1]) {
                    if (cval != val) continue;
                    Table tmp;
                    Table one{{cst, cval}};
                    do_forget(nd, nice.nodes[nd.c1], one, tmp);
                    auto it = tmp.find(st);
                    if (it != tmp.end() && it->second == val) {
                        std::uint64_t c =
                            getc(cst, bag_pos(nice.nodes[nd.c1].bag, nd.v));
                        if (c == D0) tr.single.push_back(nd.v);
                        return walk(nd.c1, cst, cval, tr);
                    }
                }
                assert(false && "forget trace failed");
                return;
            }
            case Kind::Join: {
                int s = static_cast<int>(nd.bag.size());
                if (get_done(st)) {
                    auto ia = tables[nd.c1].find(st);
                    auto zb = tables[nd.c2].find(0);
                    if (ia != tables[nd.c1].end() && zb != tables[nd.c2].end() &&
                        ia->second + zb->second == val) {
                        walk(nd.c1, st, ia->second, tr);
                        walk(nd.c2, 0, zb->second, tr);
                        return;
                    }
                    auto ib = tables[nd.c2].find(st);
                    auto za = tables[nd.c1].find(0);
                    if (ib != tables[nd.c2].end() && za != tables[nd.c1].end() &&
                        ib->second + za->second == val) {
                        walk(nd.c1, 0, za->second, tr);
                        walk(nd.c2, st, ib->second, tr);
                        return;
                    }
                }
                std::uint32_t mask = on_mask(st, s);
                int overlap = 0;
                for (int i = 0; i < s; ++i)
                    if (mask & (1u << i)) overlap += w[nd.bag[i]];
                for (auto [sa, v1] : tables[nd.c1]) {
                    if (get_done(sa) || on_mask(sa, s) != mask) continue;
                    for (auto [sb, v2] : tables[nd.c2]) {
                        if (get_done(sb) || v1 + v2 - overlap != val) continue;
                        std::uint64_t res;
                        if (merge_states(s, nd.bag, sa, sb, res) && res == st) {
                            walk(nd.c1, sa, v1, tr);
                            walk(nd.c2, sb, v2, tr);
                            return;
                        }
                    }
                }
                assert(false && "join trace failed");
                return;
            }
        }
    }

    PathWitness assemble(const Trace& tr) const {
        PathWitness wit;
        wit.cyclic = opts.cycle;
        if (tr.used_edges.empty()) {
            if (!tr.single.empty()) wit.seq.push_back(tr.single.front());
            return wit;
        }
        std::unordered_map<int, std::vector<int>> adj;
        for (auto [u, v] : tr.used_edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        int start = tr.used_edges.front().first;
        if (!opts.cycle) {
            for (auto& [v, nb] : adj)
                if (nb.size() == 1) start = v;
        }
        std::vector<int> seq{start};
        int prev = -1, cur = start;
        while (true) {
            int nxt = -1;
            for (int y : adj[cur])
                if (y != prev) {
                    nxt = y;
                    break;
                }
            if (nxt < 0) break;
            if (opts.cycle && nxt == start) break;
            prev = cur;
            cur = nxt;
            seq.push_back(cur);
        }
        wit.seq = std::move(seq);
        return wit;
    }
};

struct RootQuery {
    std::int32_t best = NEG;
    std::uint64_t state = 0;
};

PathResult run_path_dp(const Graph& g, PathDPOptions opts, int* per_spec = nullptr) {
    int n = g.num_vertices();
    auto eo = core::is_chordal(g);
    if (!eo) throw std::invalid_argument("graph is not chordal");
    {
        Skeleton sk = skeleton_from_order(g, *eo);
        size_t maxbag = 0;
        for (auto& b : sk.bags) maxbag = std::max(maxbag, b.size());
        if (static_cast<int>(maxbag) - 1 > kWidthGuard)
            throw std::invalid_argument("width guard exceeded");
    }
    Nice nice = build_nice(g);
    PathEngine eng(g, nice, opts);
    eng.run();
    const Table& root = eng.tables[nice.root];
    if (per_spec) {
        for (int z = 0; z < 3; ++z) per_spec[z] = -1;
        for (auto [st, val] : root) {
            if (!get_done(st)) continue;
            int z = get_spec(st);
            if (z <= 2) per_spec[z] = std::max(per_spec[z], static_cast<int>(val));
        }
        return {};
    }
    RootQuery q;
    for (auto [st, val] : root)
        if (get_done(st) && val > q.best) {
            q.best = val;
            q.state = st;
        }
    PathResult res;
    if (q.best == NEG) {
        res.value = 0;
        return res;
    }
    res.value = q.best;
    PathEngine::Trace tr;
    eng.walk(nice.root, q.state, q.best, tr);
    res.witness = eng.assemble(tr);
    return res;
}

}  // namespace

PathResult longest_path(const Graph& g, const std::vector<int>* weight) {
    if (g.num_vertices() == 0) return {};
    PathDPOptions o;
    o.weight = weight;
    return run_path_dp(g, o);
}

PathResult longest_cycle(const Graph& g, const std::vector<int>* weight) {
    if (g.num_vertices() < 3) return {};
    PathDPOptions o;
    o.cycle = true;
    o.weight = weight;
    return run_path_dp(g, o);
}

bool has_hamilton_path_between(const Graph& g, int x1, int x2) {
    int n = g.num_vertices();
    if (x1 == x2 || x1 < 0 || x2 < 0 || x1 >= n || x2 >= n) return false;
    if (n < 2) return false;
    PathDPOptions o;
    o.must_cover = true;
    std::vector<char> ends(n, 0);
    ends[x1] = ends[x2] = 1;
    o.allowed_ends = &ends;
    auto res = run_path_dp(g, o);
    return res.value == n;
}

std::array<int, 3> max_weight_path_by_special_ends(const Graph& g,
                                                   const std::vector<int>& weight,
                                                   const std::vector<char>& special) {
    PathDPOptions o;
    o.weight = &weight;
    o.special = &special;
    int out[3];
    run_path_dp(g, o, out);
    return {out[0], out[1], out[2]};
}

// ---------------------------------------------------------------------------
// Toughness DP.
// ---------------------------------------------------------------------------

namespace {

// Per-position nibbles: 0xF = deleted, otherwise block id (first-occurrence
// canonical). Bits 32..33: capped count of completed components (parametric
// mode only; 2 means ">= 2").

constexpr std::uint64_t DEL = 0xF;

std::uint64_t tg(std::uint64_t st, int p) { return (st >> (4 * p)) & 0xF; }
std::uint64_t ts(std::uint64_t st, int p, std::uint64_t c) {
    return (st & ~(0xFull << (4 * p))) | (c << (4 * p));
}

std::uint64_t canon_partition(std::uint64_t st, int s) {
    std::array<int, 16> remap;
    remap.fill(-1);
    int next = 0;
    std::uint64_t out = st & ~0xFFFFFFFFull;
    for (int i = 0; i < s; ++i) {
        std::uint64_t c = tg(st, i);
        if (c == DEL) {
            out = ts(out, i, DEL);
        } else {
            if (remap[c] < 0) remap[c] = next++;
            out = ts(out, i, remap[c]);
        }
    }
    return out;
}

std::uint64_t part_shift_in(std::uint64_t st, int s, int p) {
    std::uint64_t out = st & ~0xFFFFFFFFull;
    for (int i = s; i > p; --i) out = ts(out, i, tg(st, i - 1));
    for (int i = 0; i < p; ++i) out = ts(out, i, tg(st, i));
    return out;
}

std::uint64_t part_shift_out(std::uint64_t st, int s, int p) {
    std::uint64_t out = st & ~0xFFFFFFFFull;
    for (int i = 0; i < s; ++i) {
        if (i == p) continue;
        out = ts(out, i < p ? i : i - 1, tg(st, i));
    }
    return out;
}

// ---- s(m)-table engine (small n) ----

constexpr std::int32_t INF = std::numeric_limits<std::int32_t>::max() / 4;

struct SepTable {
    // state -> vector over m (completed components) of min |X|.
    std::unordered_map<std::uint64_t, std::vector<std::int32_t>> d;
};

struct SepEngine {
    const Graph& g;
    const Nice& nice;
    int n;
    std::vector<SepTable> tables;

    SepEngine(const Graph& gg, const Nice& nn) : g(gg), nice(nn), n(gg.num_vertices()) {}

    static void relax_vec(std::vector<std::int32_t>& dst, int m, std::int32_t v) {
        if (static_cast<int>(dst.size()) <= m) dst.resize(m + 1, INF);
        dst[m] = std::min(dst[m], v);
    }

    void put(SepTable& t, std::uint64_t st, const std::vector<std::int32_t>& vec, int shift,
             std::int32_t add) {
        auto& dst = t.d[st];
        for (int m = 0; m < static_cast<int>(vec.size()); ++m)
            if (vec[m] < INF) relax_vec(dst, m + shift, vec[m] + add);
    }

    void run() {
        tables.resize(nice.nodes.size());
        for (size_t i = 0; i < nice.nodes.size(); ++i) {
            const auto& nd = nice.nodes[i];
            auto& out = tables[i];
            switch (nd.kind) {
                case Kind::Leaf:
                    out.d[0] = {0};
                    break;
                case Kind::IntroV: {
                    int s = static_cast<int>(nd.bag.size());
                    int p = bag_pos(nd.bag, nd.v);
                    for (auto& [st, vec] : tables[nd.c1].d) {
                        std::uint64_t base = part_shift_in(st, s - 1, p);
                        put(out, canon_partition(ts(base, p, DEL), s), vec, 0, 1);
                        // New singleton block: use an unused id.
                        std::uint64_t fresh = 0;
                        for (int q = 0; q < s; ++q)
                            if (q != p && tg(base, q) != DEL)
                                fresh = std::max(fresh, tg(base, q) + 1);
                        put(out, canon_partition(ts(base, p, fresh), s), vec, 0, 0);
                    }
                    break;
                }
                case Kind::IntroE: {
                    int s = static_cast<int>(nd.bag.size());
                    int pu = bag_pos(nd.bag, nd.eu), pv = bag_pos(nd.bag, nd.ev);
                    for (auto& [st, vec] : tables[nd.c1].d) {
                        std::uint64_t cu = tg(st, pu), cv = tg(st, pv);
                        if (cu == DEL || cv == DEL || cu == cv) {
                            put(out, st, vec, 0, 0);
                        } else {
                            std::uint64_t lo = std::min(cu, cv), hi = std::max(cu, cv);
                            std::uint64_t ns = st;
                            for (int q = 0; q < s; ++q)
                                if (tg(ns, q) == hi) ns = ts(ns, q, lo);
                            put(out, canon_partition(ns, s), vec, 0, 0);
                        }
                    }
                    break;
                }
                case Kind::Forget: {
                    const auto& cbag = nice.nodes[nd.c1].bag;
                    int s = static_cast<int>(cbag.size());
                    int p = bag_pos(cbag, nd.v);
                    for (auto& [st, vec] : tables[nd.c1].d) {
                        std::uint64_t c = tg(st, p);
                        std::uint64_t ns = part_shift_out(st, s, p);
                        if (c == DEL) {
                            put(out, canon_partition(ns, s - 1), vec, 0, 0);
                        } else {
                            bool last = true;
                            for (int q = 0; q < s; ++q)
                                if (q != p && tg(st, q) == c) last = false;
                            put(out, canon_partition(ns, s - 1), vec, last ? 1 : 0, 0);
                        }
                    }
                    break;
                }
                case Kind::Join: {
                    int s = static_cast<int>(nd.bag.size());
                    for (auto& [sa, va] : tables[nd.c1].d)
                        for (auto& [sb, vb] : tables[nd.c2].d) {
                            // Deleted sets must agree.
                            bool ok = true;
                            int ndel = 0;
                            for (int q = 0; q < s && ok; ++q) {
                                bool dA = tg(sa, q) == DEL, dB = tg(sb, q) == DEL;
                                if (dA != dB) ok = false;
                                if (dA) ++ndel;
                            }
                            if (!ok) continue;
                            // Merge partitions (union of constraints).
                            std::array<int, 8> uf;
                            for (int q = 0; q < s; ++q) uf[q] = q;
                            auto find = [&](auto&& self, int x) -> int {
                                return uf[x] == x ? x : uf[x] = self(self, uf[x]);
                            };
                            auto unite = [&](int x, int y) { uf[find(find, x)] = find(find, y); };
                            for (auto st : {sa, sb})
                                for (int q1 = 0; q1 < s; ++q1)
                                    for (int q2 = q1 + 1; q2 < s; ++q2)
                                        if (tg(st, q1) != DEL && tg(st, q1) == tg(st, q2))
                                            unite(q1, q2);
                            std::uint64_t ns = 0;
                            std::array<int, 8> lab;
                            lab.fill(-1);
                            int next = 0;
                            for (int q = 0; q < s; ++q) {
                                if (tg(sa, q) == DEL) {
                                    ns = ts(ns, q, DEL);
                                } else {
                                    int r = find(find, q);
                                    if (lab[r] < 0) lab[r] = next++;
                                    ns = ts(ns, q, lab[r]);
                                }
                            }
                            auto& dst = out.d[ns];
                            for (int m1 = 0; m1 < static_cast<int>(va.size()); ++m1) {
                                if (va[m1] >= INF) continue;
                                for (int m2 = 0; m2 < static_cast<int>(vb.size()); ++m2) {
                                    if (vb[m2] >= INF) continue;
                                    if (m1 + m2 > n) continue;
                                    relax_vec(dst, m1 + m2, va[m1] + vb[m2] - ndel);
                                }
                            }
                        }
                    break;
                }
            }
        }
    }

    // Trace a root entry (m, |X|) back to the deleted set.
    void walk(int node, std::uint64_t st, int m, std::int32_t val, std::vector<int>& X) const {
        const auto& nd = nice.nodes[node];
        auto matches = [&](int cnode, std::uint64_t cst, int cm, std::int32_t cval) {
            auto it = tables[cnode].d.find(cst);
            if (it == tables[cnode].d.end()) return false;
            return cm >= 0 && cm < static_cast<int>(it->second.size()) && it->second[cm] == cval;
        };
        switch (nd.kind) {
            case Kind::Leaf:
                return;
            case Kind::IntroV:
            case Kind::IntroE:
            case Kind::Forget: {
                // Invert by forward-search over child entries.
                for (auto& [cst, cvec] : tables[nd.c1].d) {
                    for (int cm = 0; cm < static_cast<int>(cvec.size()); ++cm) {
                        if (cvec[cm] >= INF) continue;
                        std::vector<std::tuple<std::uint64_t, int, std::int32_t, bool>> res;
                        forward_one(nd, node, cst, cm, cvec[cm], res);
                        for (auto& [rst, rm, rv, del] : res) {
                            if (rst == st && rm == m && rv == val) {
                                if (del && nd.kind == Kind::IntroV) X.push_back(nd.v);
                                walk(nd.c1, cst, cm, cvec[cm], X);
                                return;
                            }
                        }
                    }
                }
                assert(false && "sep trace failed");
                return;
            }
            case Kind::Join: {
                int s = static_cast<int>(nd.bag.size());
                for (auto& [sa, va] : tables[nd.c1].d)
                    for (auto& [sb, vb] : tables[nd.c2].d) {
                        bool ok = true;
                        int ndel = 0;
                        for (int q = 0; q < s && ok; ++q) {
                            bool dA = tg(sa, q) == DEL, dB = tg(sb, q) == DEL;
                            if (dA != dB) ok = false;
                            if (dA) ++ndel;
                        }
                        if (!ok) continue;
                        std::uint64_t merged = merge_parts(sa, sb, s);
                        if (merged != st) continue;
                        for (int m1 = 0; m1 < static_cast<int>(va.size()); ++m1) {
                            if (va[m1] >= INF) continue;
                            int m2 = m - m1;
                            if (m2 < 0 || m2 >= static_cast<int>(vb.size()) || vb[m2] >= INF)
                                continue;
                            if (va[m1] + vb[m2] - ndel != val) continue;
                            walk(nd.c1, sa, m1, va[m1], X);
                            walk(nd.c2, sb, m2, vb[m2], X);
                            return;
                        }
                    }
                assert(false && "sep join trace failed");
                return;
            }
        }
        (void)matches;
    }

    static std::uint64_t merge_parts(std::uint64_t sa, std::uint64_t sb, int s) {
        std::array<int, 8> uf;
        for (int q = 0; q < s; ++q) uf[q] = q;
        auto find = [&](auto&& self, int x) -> int {
            return uf[x] == x ? x : uf[x] = self(self, uf[x]);
        };
        for (auto st : {sa, sb})
            for (int q1 = 0; q1 < s; ++q1)
                for (int q2 = q1 + 1; q2 < s; ++q2)
                    if (tg(st, q1) != DEL && tg(st, q1) == tg(st, q2))
                        uf[find(find, q1)] = find(find, q2);
        std::uint64_t ns = 0;
        std::array<int, 8> lab;
        lab.fill(-1);
        int next = 0;
        for (int q = 0; q < s; ++q) {
            if (tg(sa, q) == DEL) {
                ns = ts(ns, q, DEL);
            } else {
                int r = find(find, q);
                if (lab[r] < 0) lab[r] = next++;
                ns = ts(ns, q, lab[r]);
            }
        }
        return ns;
    }

    // Forward transitions of a single entry for trace inversion.
    void forward_one(const NiceNode& nd, int node, std::uint64_t cst, int cm, std::int32_t cval,
                     std::vector<std::tuple<std::uint64_t, int, std::int32_t, bool>>& res) const {
        switch (nd.kind) {
            case Kind::IntroV: {
                int s = static_cast<int>(nd.bag.size());
                int p = bag_pos(nd.bag, nd.v);
                std::uint64_t base = part_shift_in(cst, s - 1, p);
                res.emplace_back(canon_partition(ts(base, p, DEL), s), cm, cval + 1, true);
                std::uint64_t fresh = 0;
                for (int q = 0; q < s; ++q)
                    if (q != p && tg(base, q) != DEL) fresh = std::max(fresh, tg(base, q) + 1);
                res.emplace_back(canon_partition(ts(base, p, fresh), s), cm, cval, false);
                break;
            }
            case Kind::IntroE: {
                int s = static_cast<int>(nd.bag.size());
                int pu = bag_pos(nd.bag, nd.eu), pv = bag_pos(nd.bag, nd.ev);
                std::uint64_t cu = tg(cst, pu), cv = tg(cst, pv);
                if (cu == DEL || cv == DEL || cu == cv) {
                    res.emplace_back(cst, cm, cval, false);
                } else {
                    std::uint64_t lo = std::min(cu, cv), hi = std::max(cu, cv);
                    std::uint64_t ns = cst;
                    for (int q = 0; q < s; ++q)
                        if (tg(ns, q) == hi) ns = ts(ns, q, lo);
                    res.emplace_back(canon_partition(ns, s), cm, cval, false);
                }
                break;
            }
            case Kind::Forget: {
                const auto& cbag = nice.nodes[nd.c1].bag;
                int s = static_cast<int>(cbag.size());
                int p = bag_pos(cbag, nd.v);
                std::uint64_t c = tg(cst, p);
                std::uint64_t ns = part_shift_out(cst, s, p);
                if (c == DEL) {
                    res.emplace_back(canon_partition(ns, s - 1), cm, cval, false);
                } else {
                    bool last = true;
                    for (int q = 0; q < s; ++q)
                        if (q != p && tg(cst, q) == c) last = false;
                    res.emplace_back(canon_partition(ns, s - 1), cm + (last ? 1 : 0), cval, false);
                }
                break;
            }
            default:
                break;
        }
        (void)node;
    }
};

// ---- parametric engine (large n) ----

struct ParamEngine {
    const Graph& g;
    const Nice& nice;
    std::int64_t P, Q;  // minimize Q|X| - P * components
    std::vector<std::unordered_map<std::uint64_t, std::int64_t>> tables;

    static int get_c2(std::uint64_t st) { return static_cast<int>((st >> 32) & 3); }
    static std::uint64_t set_c2(std::uint64_t st, int c) {
        return (st & ~(3ull << 32)) | (static_cast<std::uint64_t>(c) << 32);
    }

    ParamEngine(const Graph& gg, const Nice& nn, std::int64_t p, std::int64_t q)
        : g(gg), nice(nn), P(p), Q(q) {}

    static void relax(std::unordered_map<std::uint64_t, std::int64_t>& t, std::uint64_t st,
                      std::int64_t v) {
        auto [it, fresh] = t.emplace(st, v);
        if (!fresh && it->second > v) it->second = v;
    }

    void run() {
        tables.assign(nice.nodes.size(), {});
        for (size_t i = 0; i < nice.nodes.size(); ++i) {
            const auto& nd = nice.nodes[i];
            auto& out = tables[i];
            switch (nd.kind) {
                case Kind::Leaf:
                    relax(out, 0, 0);
                    break;
                case Kind::IntroV: {
                    int s = static_cast<int>(nd.bag.size());
                    int p = bag_pos(nd.bag, nd.v);
                    for (auto [st, val] : tables[nd.c1]) {
                        std::uint64_t base = part_shift_in(st, s - 1, p);
                        relax(out, canon_partition(ts(base, p, DEL), s), val + Q);
                        std::uint64_t fresh = 0;
                        for (int q = 0; q < s; ++q)
                            if (q != p && tg(base, q) != DEL) fresh = std::max(fresh, tg(base, q) + 1);
                        relax(out, canon_partition(ts(base, p, fresh), s), val);
                    }
                    break;
                }
                case Kind::IntroE: {
                    int s = static_cast<int>(nd.bag.size());
                    int pu = bag_pos(nd.bag, nd.eu), pv = bag_pos(nd.bag, nd.ev);
                    for (auto [st, val] : tables[nd.c1]) {
                        std::uint64_t cu = tg(st, pu), cv = tg(st, pv);
                        if (cu == DEL || cv == DEL || cu == cv) {
                            relax(out, st, val);
                        } else {
                            std::uint64_t lo = std::min(cu, cv), hi = std::max(cu, cv);
                            std::uint64_t ns = st;
                            for (int q = 0; q < s; ++q)
                                if (tg(ns, q) == hi) ns = ts(ns, q, lo);
                            relax(out, canon_partition(ns, s), val);
                        }
                    }
                    break;
                }
                case Kind::Forget: {
                    const auto& cbag = nice.nodes[nd.c1].bag;
                    int s = static_cast<int>(cbag.size());
                    int p = bag_pos(cbag, nd.v);
                    for (auto [st, val] : tables[nd.c1]) {
                        std::uint64_t c = tg(st, p);
                        std::uint64_t ns = part_shift_out(st, s, p);
                        if (c == DEL) {
                            relax(out, canon_partition(ns, s - 1), val);
                        } else {
                            bool last = true;
                            for (int q = 0; q < s; ++q)
                                if (q != p && tg(st, q) == c) last = false;
                            if (last) {
                                std::uint64_t done = canon_partition(ns, s - 1);
                                done = set_c2(done, std::min(get_c2(st) + 1, 2));
                                relax(out, done, val - P);
                            } else {
                                relax(out, canon_partition(ns, s - 1) | (st & (3ull << 32)), val);
                            }
                        }
                    }
                    break;
                }
                case Kind::Join: {
                    int s = static_cast<int>(nd.bag.size());
                    for (auto [sa, va] : tables[nd.c1])
                        for (auto [sb, vb] : tables[nd.c2]) {
                            bool ok = true;
                            int ndel = 0;
                            for (int q = 0; q < s && ok; ++q) {
                                bool dA = tg(sa, q) == DEL, dB = tg(sb, q) == DEL;
                                if (dA != dB) ok = false;
                                if (dA) ++ndel;
                            }
                            if (!ok) continue;
                            std::uint64_t merged = SepEngine::merge_parts(sa, sb, s);
                            merged = set_c2(merged, std::min(get_c2(sa) + get_c2(sb), 2));
                            relax(out, merged, va + vb - static_cast<std::int64_t>(ndel) * Q);
                        }
                    break;
                }
            }
        }
    }

    // Traceback collecting the deleted set for the root entry (st, val).
    void walk(int node, std::uint64_t st, std::int64_t val, std::vector<int>& X) const {
        const auto& nd = nice.nodes[node];
        switch (nd.kind) {
            case Kind::Leaf:
                return;
            case Kind::IntroV: {
                int s = static_cast<int>(nd.bag.size());
                int p = bag_pos(nd.bag, nd.v);
                for (auto [cst, cval] : tables[nd.c1]) {
                    std::uint64_t base = part_shift_in(cst, s - 1, p);
                    if (canon_partition(ts(base, p, DEL), s) == st && cval + Q == val) {
                        X.push_back(nd.v);
                        return walk(nd.c1, cst, cval, X);
                    }
                    std::uint64_t fresh = 0;
                    for (int q = 0; q < s; ++q)
                        if (q != p && tg(base, q) != DEL) fresh = std::max(fresh, tg(base, q) + 1);
                    if (canon_partition(ts(base, p, fresh), s) == st && cval == val)
                        return walk(nd.c1, cst, cval, X);
                }
                assert(false && "param trace failed");
                return;
            }
            case Kind::IntroE: {
                int s = static_cast<int>(nd.bag.size());
                int pu = bag_pos(nd.bag, nd.eu), pv = bag_pos(nd.bag, nd.ev);
                for (auto [cst, cval] : tables[nd.c1]) {
                    if (cval != val) continue;
                    std::uint64_t cu = tg(cst, pu), cv = tg(cst, pv);
                    std::uint64_t ns;
                    if (cu == DEL || cv == DEL || cu == cv) {
                        ns = cst;
                    } else {
                        std::uint64_t lo = std::min(cu, cv), hi = std::max(cu, cv);
                        ns = cst;
                        for (int q = 0; q < s; ++q)
                            if (tg(ns, q) == hi) ns = ts(ns, q, lo);
                        ns = canon_partition(ns, s);
                    }
                    if (ns == st) return walk(nd.c1, cst, cval, X);
                }
                assert(false && "param trace failed");
                return;
            }
            case Kind::Forget: {
                const auto& cbag = nice.nodes[nd.c1].bag;
                int s = static_cast<int>(cbag.size());
                int p = bag_pos(cbag, nd.v);
                for (auto [cst, cval] : tables[nd.c1]) {
                    std::uint64_t c = tg(cst, p);
                    std::uint64_t ns = part_shift_out(cst, s, p);
                    if (c == DEL) {
                        if ((canon_partition(ns, s - 1) | (cst & (3ull << 32))) == st && cval == val)
                            return walk(nd.c1, cst, cval, X);
                    } else {
                        bool last = true;
                        for (int q = 0; q < s; ++q)
                            if (q != p && tg(cst, q) == c) last = false;
                        if (last) {
                            std::uint64_t done = canon_partition(ns, s - 1);
                            done = set_c2(done, std::min(get_c2(cst) + 1, 2));
                            if (done == st && cval - P == val) return walk(nd.c1, cst, cval, X);
                        } else {
                            if ((canon_partition(ns, s - 1) | (cst & (3ull << 32))) == st &&
                                cval == val)
                                return walk(nd.c1, cst, cval, X);
                        }
                    }
                }
                assert(false && "param trace failed");
                return;
            }
            case Kind::Join: {
                int s = static_cast<int>(nd.bag.size());
                for (auto [sa, va] : tables[nd.c1])
                    for (auto [sb, vb] : tables[nd.c2]) {
                        bool ok = true;
                        int ndel = 0;
                        for (int q = 0; q < s && ok; ++q) {
                            bool dA = tg(sa, q) == DEL, dB = tg(sb, q) == DEL;
                            if (dA != dB) ok = false;
                            if (dA) ++ndel;
                        }
                        if (!ok) continue;
                        std::uint64_t merged = SepEngine::merge_parts(sa, sb, s);
                        merged = set_c2(merged, std::min(get_c2(sa) + get_c2(sb), 2));
                        if (merged == st && va + vb - static_cast<std::int64_t>(ndel) * Q == val) {
                            walk(nd.c1, sa, va, X);
                            walk(nd.c2, sb, vb, X);
                            return;
                        }
                    }
                assert(false && "param join trace failed");
                return;
            }
        }
    }
};

}  // namespace

ToughnessReport toughness_exact(const Graph& g) {
    int n = g.num_vertices();
    ToughnessReport rep;
    if (n <= 2 || g.num_edges() == n * (n - 1) / 2) {
        rep.value = Rational::infinity();
        return rep;
    }
    auto eo = core::is_chordal(g);
    bool dp_ok = false;
    if (eo) {
        int width = core::chordal_clique_number(g, *eo) - 1;
        dp_ok = width <= kWidthGuard;
    }
    if (!dp_ok) {
        if (n <= oracles::kToughnessGuard) return oracles::bf_toughness(g);
        throw std::invalid_argument("width guard exceeded and n beyond oracle limit");
    }

    Nice nice = build_nice(g);

    if (n <= 120) {
        // Full s(m) table.
        SepEngine eng(g, nice);
        eng.run();
        const auto& root = eng.tables[nice.root].d;
        auto it = root.find(0);
        if (it == root.end()) {
            rep.value = Rational::infinity();
            return rep;
        }
        const auto& s = it->second;
        rep.value = Rational::infinity();
        int best_m = -1;
        for (int m = 2; m < static_cast<int>(s.size()); ++m) {
            if (s[m] >= INF) continue;
            Rational r(s[m], m);
            if (r < rep.value) {
                rep.value = r;
                best_m = m;
            }
        }
        if (best_m < 0) {
            rep.value = Rational::infinity();
            return rep;
        }
        eng.walk(nice.root, 0, best_m, s[best_m], rep.witness);
        // A vertex in several branches of the decomposition is recorded once
        // per branch; the join stage de-duplicates the count, the trace must
        // de-duplicate the set.
        std::sort(rep.witness.begin(), rep.witness.end());
        rep.witness.erase(std::unique(rep.witness.begin(), rep.witness.end()),
                          rep.witness.end());
        rep.components = best_m;
        return rep;
    }

    // Parametric iteration: start from any separator's ratio and improve.
    auto ratio_of = [&](const std::vector<int>& X) -> std::pair<Rational, int> {
        std::vector<char> rem(n, 0);
        for (int v : X) rem[v] = 1;
        int comps = g.component_count(rem);
        return {Rational(static_cast<int>(X.size()), comps), comps};
    };
    std::vector<int> witness;
    {
        // Initial separator: the neighbourhood of a vertex with a non-neighbour.
        for (int v = 0; v < n && witness.empty(); ++v)
            if (g.degree(v) < n - 1) witness = g.neighbors(v);
    }
    auto [t, comps0] = ratio_of(witness);
    int comps = comps0;
    while (true) {
        ParamEngine eng(g, nice, t.num, t.den);
        eng.run();
        const auto& root = eng.tables[nice.root];
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        std::uint64_t best_st = 0;
        for (auto [st, val] : root) {
            if (ParamEngine::get_c2(st) < 2) continue;
            if (val < best) {
                best = val;
                best_st = st;
            }
        }
        assert(best < std::numeric_limits<std::int64_t>::max());
        if (best >= 0) break;  // no separator with ratio < t
        std::vector<int> X;
        eng.walk(nice.root, best_st, best, X);
        std::sort(X.begin(), X.end());
        X.erase(std::unique(X.begin(), X.end()), X.end());
        auto [r, c] = ratio_of(X);
        assert(r < t);
        t = r;
        comps = c;
        witness = std::move(X);
    }
    rep.value = t;
    rep.witness = witness;
    rep.components = comps;
    return rep;
}

}  // namespace toughtree::twdp
