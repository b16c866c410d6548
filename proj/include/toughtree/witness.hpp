#ifndef TOUGHTREE_WITNESS_HPP
#define TOUGHTREE_WITNESS_HPP

#include <vector>

#include "toughtree/graph.hpp"
#include "toughtree/rational.hpp"

namespace toughtree {

/// Ordered vertex sequence certifying a path (or cycle, if `cyclic`).
struct PathWitness {
    std::vector<int> seq;
    bool cyclic = false;
};

/// Consecutive vertices adjacent, no repeats; cyclic witnesses additionally
/// need the closing edge and length >= 3.
inline bool validate_path_witness(const Graph& g, const PathWitness& w,
                                  bool require_spanning = false) {
    const auto& s = w.seq;
    if (s.empty()) return false;
    std::vector<char> seen(g.num_vertices(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.num_vertices() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (!g.has_edge(s[i], s[i + 1])) return false;
    if (w.cyclic) {
        if (s.size() < 3 || !g.has_edge(s.front(), s.back())) return false;
    }
    if (require_spanning && static_cast<int>(s.size()) != g.num_vertices()) return false;
    return true;
}

/// Exact rational toughness plus a witness separator achieving it.
struct ToughnessReport {
    Rational value;            // +infinity for complete graphs
    std::vector<int> witness;  // separating set (empty iff infinite)
    int components = 0;        // components of G - witness
};

inline bool validate_toughness_witness(const Graph& g, const ToughnessReport& rep) {
    if (rep.value.is_infinite()) return rep.witness.empty();
    std::vector<char> removed(g.num_vertices(), 0);
    for (int v : rep.witness) {
        if (v < 0 || v >= g.num_vertices() || removed[v]) return false;
        removed[v] = 1;
    }
    int comps = g.component_count(removed);
    if (comps < 2 || comps != rep.components) return false;
    return Rational(static_cast<int>(rep.witness.size()), comps) == rep.value;
}

}  // namespace toughtree

#endif
