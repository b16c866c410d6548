#ifndef TOUGHTREE_TWDP_HPP
#define TOUGHTREE_TWDP_HPP

#include <array>
#include <optional>
#include <vector>

#include "toughtree/core.hpp"
#include "toughtree/graph.hpp"
#include "toughtree/witness.hpp"

namespace toughtree::twdp {

/// Exact decision engine over clique-tree decompositions of chordal graphs.
/// Longest path / cycle DP is guarded at width <= kWidthGuard; each query is
/// pure and independent.

inline constexpr int kWidthGuard = 6;

/// Tree decomposition derived from a perfect elimination ordering; for
/// chordal inputs width equals clique number - 1.
struct CliqueTree {
    std::vector<std::vector<int>> bags;        // sorted vertex sets
    std::vector<std::pair<int, int>> edges;    // tree edges between bags
    int width = 0;
};

/// Throws std::invalid_argument on non-chordal input.
CliqueTree clique_tree(const Graph& g);
bool verify_clique_tree(const Graph& g, const CliqueTree& ct);

struct PathResult {
    int value = 0;  // maximum vertex count (or total weight)
    PathWitness witness;
};

/// Exact maximum over all paths (>= 1 vertex). With `weight`, maximizes the
/// total vertex weight instead of the count. Throws on non-chordal input or
/// width guard violation.
PathResult longest_path(const Graph& g, const std::vector<int>* weight = nullptr);

/// As longest_path, over cycles of length >= 3. Returns value 0 with an
/// empty witness when the graph is acyclic.
PathResult longest_cycle(const Graph& g, const std::vector<int>* weight = nullptr);

bool has_hamilton_path_between(const Graph& g, int x1, int x2);

/// res[z] = maximum total weight over paths with exactly z ends in `special`
/// (z = 0, 1, 2), or -1 when no such path exists. Used for the white-vertex
/// path bounds of the generated families.
std::array<int, 3> max_weight_path_by_special_ends(const Graph& g,
                                                   const std::vector<int>& weight,
                                                   const std::vector<char>& special);

/// Exact rational toughness with a witness separator. Chordal inputs of
/// width <= kWidthGuard go through the decomposition DP (s(m) table for
/// small graphs, parametric iteration for large ones); other inputs fall
/// back to the brute-force oracle when n <= 20. Throws otherwise.
ToughnessReport toughness_exact(const Graph& g);

}  // namespace toughtree::twdp

#endif
