#ifndef TOUGHTREE_HAMILTON_HPP
#define TOUGHTREE_HAMILTON_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toughtree/graph.hpp"
#include "toughtree/witness.hpp"

namespace toughtree::hamilton {

/// Constructive Hamiltonicity for k-trees whose toughness clears the k/3
/// threshold. Every builder returns an explicit witness; structural
/// assumptions that fail at runtime surface as PreconditionError naming the
/// violated condition. The builders never re-verify toughness themselves.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-universal vertex v, its bud S (all degree-k neighbors), and the
/// remaining neighborhood R = N(v) \ S, which induces a K_k.
struct Twig {
    int v = -1;
    std::vector<int> bud;   // sorted, non-empty
    std::vector<int> rest;  // sorted, |rest| = k, clique
};

/// All twigs of a k-tree, sorted by vertex id.
/// Throws std::invalid_argument when g is not a k-tree.
std::vector<Twig> find_twigs(const Graph& g, int k);

/// S is a squeeze of v: 1 <= |S| <= 2, R = N(v) \ S has |R| >= 2, every
/// vertex of S is adjacent to at least |R| - 1 vertices of R, and every
/// vertex of R is adjacent to at least |S| - 1 vertices of S.
bool is_squeeze(const Graph& g, int v, const std::vector<int>& S);

/// Splices the squeeze S of interior vertex v into `path`: the segment
/// u, v, w (u, w the path neighbors of v) is replaced by the
/// lexicographically least Hamilton path from u to w through {u, v, w} + S.
/// Throws PreconditionError when v is missing/an endpoint, S intersects the
/// path, S is not a squeeze of v, or no local Hamilton path exists.
PathWitness extend_path_with_squeeze(const Graph& g, const PathWitness& path,
                                     int v, const std::vector<int>& S);

/// Lowest-id pair of non-adjacent twigs with disjoint buds, if any.
/// Throws std::invalid_argument when g is not a k-tree.
std::optional<std::pair<Twig, Twig>> find_two_nonadjacent_twigs(const Graph& g, int k);

/// Three internally disjoint x1-x2 paths, each with at least one interior
/// vertex, jointly covering every vertex. Paths are stored endpoint to
/// endpoint (x1 first, x2 last).
struct ThetaSpanner {
    int x1 = -1, x2 = -1;
    std::array<std::vector<int>, 3> paths;
};

bool validate_theta_spanner(const Graph& g, const ThetaSpanner& sp);

/// Spanner between distinct degree-k vertices x1, x2 of a k-tree (k >= 3,
/// g != K_4). Built by peeling squeezes and re-rooting at twigs whose buds
/// capture an endpoint; throws PreconditionError when the structural
/// hypotheses fail (e.g. a bud too large to be a squeeze).
ThetaSpanner theta_spanner(const Graph& g, int k, int x1, int x2);

/// Hamilton cycle of a k-tree (k >= 2, g != K_2) by iterated bud peeling
/// and squeeze splicing. Witness is cyclic and spanning.
PathWitness hamilton_cycle(const Graph& g, int k);

/// Hamilton path between distinct vertices x1, x2 of a k-tree (k >= 3).
/// Witness starts at x1 and ends at x2.
PathWitness hamilton_path_between(const Graph& g, int k, int x1, int x2);

}  // namespace toughtree::hamilton

#endif
