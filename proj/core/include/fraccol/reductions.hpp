#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fraccol/graph.hpp"

namespace fraccol {

/// Result of a reduction producing one child graph.  `map` is indexed by
/// parent vertex id: the child id it maps to, or -1 if the vertex was removed.
struct Reduced {
    PlaneGraph graph;
    std::vector<int> map;
};

/// Composition of parent->mid and mid->child maps.
std::vector<int> compose_maps(const std::vector<int>& first, const std::vector<int>& second);

/// Identifies two non-adjacent vertices that lie on a common face (so the
/// result stays plane).  The rotation of the merged vertex splices the two
/// rotations at corners of that face; parallel edges arising from common
/// neighbors are merged.  Vertices in different components may always be
/// identified (the components join at the new vertex).
///
/// Errors: AdjacentPairError, NoCommonFaceError.
Reduced identify_vertices(const PlaneGraph& g, int u, int v);

struct FoldResult {
    Reduced child;
    int index;  // the walk position i whose flanking vertices were identified
};

/// Folds a facial walk of length different from the odd girth: identifies
/// walk[i-1] with walk[i+1] for the first cyclic index i (starting at 0) that
/// keeps the odd girth unchanged.  Such an index always exists when the
/// precondition holds; NoValidIndexError signals a violated precondition or
/// a bug.  Bipartite graphs fold freely (odd girth stays infinite).
///
/// Errors: FaceLengthEqualsGirthError, NoValidIndexError.
FoldResult fold_face(const PlaneGraph& g, const FacialWalk& face);

/// Induced subgraph on V - {v}; rotations restricted.
Reduced delete_vertex(const PlaneGraph& g, int v);

/// Induced subgraph on a vertex subset (sorted ascending ids in the child).
Reduced induced_subgraph(const PlaneGraph& g, const std::vector<int>& keep);

struct SplitResult {
    PlaneGraph first, second;
    std::vector<int> map_first, map_second;  // parent -> child, -1 if absent
};

/// Splits at a cut vertex v: first = one component of g-v plus v, second =
/// the rest plus v.  Child sizes sum to n+1.
/// Errors: NotCutVertexError.
SplitResult split_at_cut_vertex(const PlaneGraph& g, int v);

/// A pentagonal face together with a role assignment making it collapsible:
/// ring[0..4] are the face vertices r1..r5 in walk order, outside[i] the
/// unique off-face neighbor of ring[i] for i < 4.  Roles are asymmetric, so
/// one face can yield several SafeFace values (one per passing symmetry).
struct SafeFace {
    std::array<int, 5> ring;
    std::array<int, 4> outside;
};

/// The four conditions that make a role-assigned 5-face safe to collapse:
///   1. ring[0..3] have degree exactly 3;
///   2. outside[0..3] are pairwise distinct and pairwise non-adjacent;
///   3. dist(outside[1], ring[4]) >= 4 in g - {ring[0..3]};
///   4. g - {ring[0..3]} has no path of exactly 3 edges joining outside[2]
///      and outside[3].
bool is_safe_face(const PlaneGraph& g, const SafeFace& sf);

/// All safe faces of a plane triangle-free graph: each simple 5-face is
/// checked under its 10 rotations/reflections and every passing role
/// assignment is reported.
std::vector<SafeFace> find_safe_faces(const PlaneGraph& g);

/// Collapses a safe face: deletes ring[0..3], identifies outside[1] with
/// ring[4] and outside[2] with outside[3].  The child has n-6 vertices and is
/// re-verified triangle-free rather than trusted.
/// Errors: NotSafeError, TriangleCreatedError.
Reduced collapse_safe_face(const PlaneGraph& g, const SafeFace& sf);

/// Serializable record of one reduction, for trace files.
struct ReductionStep {
    enum class Kind { Fold, CutSplit, DeleteDeg2, SafeFaceCollapse };
    Kind kind;
    std::vector<PlaneGraph> children;
    std::vector<std::vector<int>> maps;  // parallel to children
    std::optional<FacialWalk> face;      // Fold
    int fold_index = -1;                 // Fold
    int vertex = -1;                     // CutSplit / DeleteDeg2
    std::optional<SafeFace> safe_face;   // SafeFaceCollapse
};

}  // namespace fraccol
