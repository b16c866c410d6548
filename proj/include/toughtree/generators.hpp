#ifndef TOUGHTREE_GENERATORS_HPP
#define TOUGHTREE_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toughtree/graph.hpp"

namespace toughtree::generators {

/// Deterministic pure constructors for the graph families. Vertex ids follow
/// the simplicial insertion order; role labels ("white", "u<i>", copy paths)
/// live in the graph's label map.

/// K_{k+1} plus three simplicial vertices, each attached to a different K_k
/// subgraph. Throws std::invalid_argument for k < 2.
Graph basic_3twig(int k);

/// The fixed 71-vertex graph: a triangulated 30-gon coned by an apex, with a
/// basic 3-twig copy glued onto each of the ten spoke faces. Vertex id i is
/// the (i+1)-th inserted vertex; outer triangle = {0, 1, 2}, apex = 3; the
/// 30 degree-3 vertices carry label "white".
Graph build_H0();

/// H_0 plus an auxiliary vertex adjacent to the outer triangle {0, 1, 2}.
Graph build_H0_plus();

struct H0Report {
    std::vector<std::pair<std::string, bool>> checks;
    bool pass = true;
    void add(const std::string& name, bool ok) {
        checks.emplace_back(name, ok);
        pass = pass && ok;
    }
};

/// Full validation: 71 vertices, 3-tree, planar criterion, 30 simplicial
/// whites, toughness exactly 1, longest cycle 63, longest path 65, max
/// whites on a cycle 22 and on a path 24 (and <= 22 + z for z white ends).
H0Report validate_H0(const Graph& g);

/// Replaces every "white"-labelled vertex by a fresh H_0 copy; the copy's
/// outer vertices receive 3, 2, 1 cross edges to the replaced vertex's
/// neighbours (lowest-id-first) so that every inserted vertex is simplicial
/// with exactly 3 neighbours. Throws when no white vertices exist.
Graph expand_Hn(const Graph& prev);

/// H_n by iterated expansion: level 0 is H_0.
Graph build_Hn(int level);

/// m universal vertices appended (mutually adjacent too).
Graph add_universal(const Graph& g, int m);

/// H_{n,k} = H_n plus (k - 3) universal vertices, k >= 4.
Graph build_Hnk(int level, int k);

/// Cubic tree whose internal vertices all have degree 3 and whose leaves all
/// sit at distance r from the centre; n = 3 * 2^r - 2. Throws for r < 1.
Graph balanced_cubic_tree(int r);

/// Exact graph square: adjacency iff distance 1 or 2.
Graph square(const Graph& g);

struct ArrangedBlock {
    Graph g0;
    int j = 0;                // |V(g0)|
    std::vector<int> white;   // simplicial, pairwise non-adjacent
    std::vector<int> outer;   // induces a complete graph
    int k = 0;                // max white vertices on any cycle of g0
};

/// Checks the block invariants (the cycle bound via the weighted cycle DP).
bool validate_arranged_block(const ArrangedBlock& b);

/// n-fold expansion replacing each white vertex by a copy of g0 attached
/// through its outer vertices (first outer vertex to all neighbours of the
/// replaced vertex, then one fewer each, lowest-id-first).
Graph arranged_block_expand(const ArrangedBlock& b, int n);

/// (vertex count, cycle bound): 1 + (j-1)(1+|W|+...+|W|^n) and
/// 1 + (l-1)(1+k+...+k^n) with l = j - |W| + k.
std::pair<std::int64_t, std::int64_t> closed_form_bounds(const ArrangedBlock& b, int n);

struct FamilyMetrics {
    int n_index = 0;
    std::int64_t f = 0;  // vertices
    std::int64_t c = 0;  // longest cycle
    std::int64_t p = 0;  // longest path
    std::int64_t w = 0;  // max white vertices on a path
};

FamilyMetrics family_metrics(int n);

}  // namespace toughtree::generators

#endif
