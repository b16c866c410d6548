#ifndef TOUGHTREE_SQUARES_HPP
#define TOUGHTREE_SQUARES_HPP

#include <optional>
#include <vector>

#include "toughtree/graph.hpp"

namespace toughtree::squares {

/// Forbidden-subtree machinery deciding Hamiltonicity of tree squares
/// without building the square. Patterns:
///   SK13    - a vertex with three limbs of length two,
///   SK15    - the same with five limbs,
///   FamilyF - two SK13 centers joined by a path (length >= 1) whose every
///             interior vertex carries an extra pendant neighbor,
///   FamilyX - a spider center with three legs (length >= 1), each ending
///             at a vertex carrying two disjoint pendant paths of length two.
enum class PatternKind { SK13, SK15, FamilyF, FamilyX };

/// Found pattern: `vertices` lists one embedded copy (distinct vertices
/// whose induced subtree is the pattern); `centers` names the hub(s).
struct ForbiddenPattern {
    PatternKind kind{};
    std::vector<int> vertices;
    std::vector<int> centers;
};

/// Smallest-index embedded copy, if any. Throws std::invalid_argument when
/// t is not a tree. In a tree, subtree containment and induced containment
/// coincide, so a structural search suffices.
std::optional<ForbiddenPattern> find_pattern(const Graph& t, PatternKind kind);

/// Checks that the witness is a faithful embedded copy in t.
bool validate_pattern(const Graph& t, const ForbiddenPattern& p);

/// Verdicts by forbidden-subtree characterization (square never built):
/// a tree square is Hamiltonian iff the tree is SK13-free (n >= 3), and has
/// a Hamilton path iff the tree is SK15-, FamilyF- and FamilyX-free.
bool square_is_hamiltonian(const Graph& t);
bool square_has_hamilton_path(const Graph& t);

struct SquareStructureReport {
    bool chordal = false;  // re-verified on the built square
    bool planar = false;   // iff the tree has maximum degree <= 3
};

SquareStructureReport square_structure_report(const Graph& t);

}  // namespace toughtree::squares

#endif
