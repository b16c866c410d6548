#ifndef TOUGHTREE_CORE_HPP
#define TOUGHTREE_CORE_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "toughtree/graph.hpp"

namespace toughtree::core {

/// Vertex ordering (v_1, ..., v_n) such that each v_i is simplicial in the
/// subgraph induced by {v_1, ..., v_i}; witnesses chordality.
struct EliminationOrder {
    std::vector<int> order;
};

struct BuildStep {
    int vertex;                 // new simplicial vertex
    std::vector<int> clique;    // its attachment clique, size k
};

/// Replaying build_order from K_k (on the k lowest ids of the base clique)
/// reproduces the graph.
struct KTreeCertificate {
    int k = 0;
    std::vector<int> base;              // the initial K_k
    std::vector<BuildStep> build_order;
};

bool is_simplicial(const Graph& g, int v);
std::vector<int> simplicial_vertices(const Graph& g);

/// Independent check of the prefix-simplicial invariant.
bool verify_elimination_order(const Graph& g, const EliminationOrder& eo);

/// Maximum-cardinality search + verification; present iff chordal.
std::optional<EliminationOrder> is_chordal(const Graph& g);

/// Certificate present iff g is a k-tree (k >= 1). Obtained by repeatedly
/// removing a simplicial vertex of degree exactly k.
std::optional<KTreeCertificate> recognize_ktree(const Graph& g, int k);

/// Replay a certificate into a graph (for the round-trip invariant).
Graph replay_certificate(const KTreeCertificate& cert, int n);
bool verify_certificate(const Graph& g, const KTreeCertificate& cert);

/// Menger-style vertex connectivity test: no separator of size < k and n > k.
bool is_k_connected(const Graph& g, int k);

/// Largest clique size of a chordal graph, via its elimination order.
int chordal_clique_number(const Graph& g, const EliminationOrder& eo);

/// All triangles (sets of 3 pairwise adjacent vertices).
std::vector<std::array<int, 3>> all_triangles(const Graph& g);

/// Planarity criterion for 3-trees: every triangle's removal leaves at most
/// two components. Requires a 3-tree certificate.
bool is_planar_3tree(const Graph& g, const KTreeCertificate& cert);

enum class ToughChordalPlanarClass { ThreeTree, K1, K2, NotApplicable };

/// Classification of graphs of toughness > 1: chordal planar iff the class
/// is not NotApplicable. The toughness precondition is the caller's.
ToughChordalPlanarClass classify_tough_chordal_planar(const Graph& g);

}  // namespace toughtree::core

#endif
