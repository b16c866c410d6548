#include "toughtree/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace toughtree::oracles {

namespace {

std::vector<int> unit_weights(int n) { return std::vector<int>(n, 1); }

}  // namespace

int bf_longest_path(const Graph& g, const std::vector<int>* weight) {
    int n = g.num_vertices();
    assert(n <= kPathGuard);
    if (n == 0) return 0;
    std::vector<int> w = weight ? *weight : unit_weights(n);
    std::vector<std::uint32_t> nb(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nb[v] |= 1u << u;

    const int NEG = -1'000'000'000;
    std::vector<std::vector<int>> row(static_cast<size_t>(1) << n);
    int best = NEG;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        auto& r = row[mask];
        r.assign(n, NEG);
        int pc = __builtin_popcount(mask);
        for (int last = 0; last < n; ++last) {
            if (!(mask & (1u << last))) continue;
            if (pc == 1) {
                r[last] = w[last];
            } else {
                std::uint32_t pmask = mask ^ (1u << last);
                const auto& pr = row[pmask];
                std::uint32_t from = nb[last] & pmask;
                int v = NEG;
                while (from) {
                    int p = __builtin_ctz(from);
                    from &= from - 1;
                    if (pr[p] > v) v = pr[p];
                }
                if (v > NEG) r[last] = v + w[last];
            }
            best = std::max(best, r[last]);
        }
    }
    return best;
}

int bf_longest_cycle(const Graph& g, const std::vector<int>* weight) {
    int n = g.num_vertices();
    assert(n <= kPathGuard);
    if (n < 3) return 0;
    std::vector<int> w = weight ? *weight : unit_weights(n);
    std::vector<std::uint32_t> nb(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nb[v] |= 1u << u;

    const int NEG = -1'000'000'000;
    // Paths constrained to start at the lowest vertex of their mask.
    std::vector<std::vector<int>> row(static_cast<size_t>(1) << n);
    int best = NEG;
    bool found = false;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int start = __builtin_ctz(mask);
        auto& r = row[mask];
        r.assign(n, NEG);
        int pc = __builtin_popcount(mask);
        for (int last = 0; last < n; ++last) {
            if (!(mask & (1u << last))) continue;
            if (pc == 1) {
                if (last == start) r[last] = w[last];
                continue;
            }
            if (last == start) continue;
            std::uint32_t pmask = mask ^ (1u << last);
            if (__builtin_ctz(pmask) != start) continue;
            const auto& pr = row[pmask];
            std::uint32_t from = nb[last] & pmask;
            int v = NEG;
            while (from) {
                int p = __builtin_ctz(from);
                from &= from - 1;
                if (pr[p] > v) v = pr[p];
            }
            if (v > NEG) r[last] = v + w[last];
            if (r[last] > NEG && pc >= 3 && (nb[last] & (1u << start))) {
                found = true;
                best = std::max(best, r[last]);
            }
        }
    }
    return found ? best : 0;
}

bool bf_has_hamilton_path_between(const Graph& g, int x1, int x2) {
    int n = g.num_vertices();
    assert(n <= kPathGuard && x1 != x2);
    if (n == 1) return false;
    std::vector<std::uint32_t> nb(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nb[v] |= 1u << u;
    std::vector<std::uint32_t> reach(static_cast<size_t>(1) << n, 0);
    reach[1u << x1] = 1u << x1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & (1u << x1))) continue;
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        std::uint32_t cand = ~mask & ((1u << n) - 1);
        while (cand) {
            int v = __builtin_ctz(cand);
            cand &= cand - 1;
            if (nb[v] & ends) reach[mask | (1u << v)] |= 1u << v;
        }
    }
    return (reach[(1u << n) - 1] >> x2) & 1;
}

ToughnessReport bf_toughness(const Graph& g) {
    int n = g.num_vertices();
    assert(n <= kToughnessGuard);
    ToughnessReport rep;
    rep.value = Rational::infinity();
    std::vector<std::uint32_t> nb(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nb[v] |= 1u << u;
    const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);

    auto component_count = [&](std::uint32_t kept) {
        int comps = 0;
        std::uint32_t rest = kept;
        while (rest) {
            ++comps;
            std::uint32_t comp = rest & (-rest);
            for (;;) {
                std::uint32_t grow = comp;
                std::uint32_t scan = comp;
                while (scan) {
                    int v = __builtin_ctz(scan);
                    scan &= scan - 1;
                    grow |= nb[v] & kept;
                }
                if (grow == comp) break;
                comp = grow;
            }
            rest &= ~comp;
        }
        return comps;
    };

    std::uint32_t best_mask = 0;
    int best_comps = 0;
    for (std::uint32_t x = 0; x <= full; ++x) {
        std::uint32_t kept = full & ~x;
        if (!kept) continue;
        int comps = component_count(kept);
        if (comps < 2) continue;
        Rational r(static_cast<int>(__builtin_popcount(x)), comps);
        if (r < rep.value) {
            rep.value = r;
            best_mask = x;
            best_comps = comps;
        }
        if (x == full) break;  // avoid wrap at n == 32 (unreachable under guard)
    }
    if (!rep.value.is_infinite()) {
        for (int v = 0; v < n; ++v)
            if (best_mask & (1u << v)) rep.witness.push_back(v);
        rep.components = best_comps;
    }
    return rep;
}

namespace {

struct CanonSearch {
    const Graph* g;
    int n;
    std::vector<int> perm;       // perm[pos] = vertex
    std::vector<char> used;
    std::vector<char> cur;       // bits laid out row by row (row i: i bits)
    std::vector<char> best;
    bool have_best = false;

    void run(int pos) {
        if (pos == n) {
            if (!have_best ||
                std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end())) {
                best = cur;
                have_best = true;
            }
            return;
        }
        int row_off = pos * (pos - 1) / 2;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            for (int j = 0; j < pos; ++j)
                cur[row_off + j] = g->has_edge(v, perm[j]) ? 1 : 0;
            // Prune branches whose prefix already exceeds the current best.
            // Comparing against the live best keeps this valid even after
            // best has been replaced deeper in the search.
            if (have_best) {
                int end = row_off + pos;
                bool greater = false;
                for (int i = 0; i < end; ++i) {
                    if (cur[i] != best[i]) {
                        greater = cur[i] > best[i];
                        break;
                    }
                }
                if (greater) continue;
            }
            perm[pos] = v;
            used[v] = 1;
            run(pos + 1);
            used[v] = 0;
        }
    }
};

}  // namespace

std::vector<std::uint64_t> canonical_form(const Graph& g) {
    int n = g.num_vertices();
    CanonSearch s;
    s.g = &g;
    s.n = n;
    s.perm.assign(n, 0);
    s.used.assign(n, 0);
    s.cur.assign(n * (n - 1) / 2, 0);
    s.run(0);
    std::vector<std::uint64_t> packed;
    packed.push_back(static_cast<std::uint64_t>(n));
    std::uint64_t word = 0;
    int fill = 0;
    for (char b : s.best) {
        word = (word << 1) | static_cast<std::uint64_t>(b);
        if (++fill == 64) {
            packed.push_back(word);
            word = 0;
            fill = 0;
        }
    }
    if (fill) packed.push_back(word << (64 - fill));
    return packed;
}

EnumerationIndex enumerate_ktrees(int k, int n, const Rational* min_toughness) {
    assert(k >= 1 && n >= k);
    EnumerationIndex idx;
    idx.k = k;
    idx.n = n;

    auto admit = [&](const Graph& g) {
        if (!min_toughness) return true;
        if (g.num_vertices() > kToughnessGuard) return false;
        return bf_toughness(g).value >= *min_toughness;
    };

    std::vector<Graph> level;
    Graph kk = complete_graph(k);
    if (admit(kk)) level.push_back(kk);
    if (n == k) {
        idx.graphs = level;
        return idx;
    }

    auto k_cliques = [&](const Graph& g) {
        // All k-cliques, by extending sorted partial cliques.
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int start) -> void {
            if (static_cast<int>(cur.size()) == k) {
                out.push_back(cur);
                return;
            }
            for (int v = start; v < g.num_vertices(); ++v) {
                bool ok = true;
                for (int u : cur)
                    if (!g.has_edge(u, v)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };

    for (int sz = k + 1; sz <= n; ++sz) {
        std::map<std::vector<std::uint64_t>, Graph> next;
        for (const auto& g : level) {
            for (const auto& clique : k_cliques(g)) {
                Graph h = g;
                int v = h.add_vertex();
                for (int u : clique) h.add_edge(v, u);
                if (!admit(h)) continue;
                auto key = canonical_form(h);
                next.emplace(std::move(key), std::move(h));
            }
        }
        level.clear();
        for (auto& [key, g] : next) level.push_back(std::move(g));
    }
    idx.graphs = std::move(level);
    return idx;
}

}  // namespace toughtree::oracles
