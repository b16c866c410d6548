#ifndef TOUGHTREE_ORACLES_HPP
#define TOUGHTREE_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "toughtree/graph.hpp"
#include "toughtree/rational.hpp"
#include "toughtree/witness.hpp"

namespace toughtree::oracles {

/// Independent brute-force ground truth for small instances. Nothing in here
/// may call into the twdp decision engine.

inline constexpr int kPathGuard = 18;
inline constexpr int kToughnessGuard = 20;

/// Exact longest path / cycle vertex counts via subset DP. Optional
/// per-vertex weights switch the objective to total weight (paths and cycles
/// still must be non-trivial: cycles need >= 3 vertices, paths >= 1).
int bf_longest_path(const Graph& g, const std::vector<int>* weight = nullptr);
int bf_longest_cycle(const Graph& g, const std::vector<int>* weight = nullptr);
bool bf_has_hamilton_path_between(const Graph& g, int x1, int x2);

/// Exact minimum of |X| / c(G-X) over separating sets X, by subset
/// enumeration. Pruned by the reduction that every removed vertex must touch
/// at least two components of an optimal separator's remainder.
ToughnessReport bf_toughness(const Graph& g);

/// Canonical adjacency encoding: the lexicographically least row-major upper
/// triangle over all vertex permutations (degree-class pruned backtracking).
std::vector<std::uint64_t> canonical_form(const Graph& g);

struct EnumerationIndex {
    int k = 0;
    int n = 0;
    std::vector<Graph> graphs;  // pairwise non-isomorphic, complete for (k, n)
};

/// All k-trees on n vertices up to isomorphism, grown by attaching simplicial
/// vertices to every k-clique. `min_toughness`, when set, prunes every graph
/// (and hence its descendants, by monotonicity of toughness under simplicial
/// additions) whose exact toughness is below the bound.
EnumerationIndex enumerate_ktrees(int k, int n,
                                  const Rational* min_toughness = nullptr);

}  // namespace toughtree::oracles

#endif
