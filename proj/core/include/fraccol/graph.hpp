#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace fraccol {

/// Abstract (unembedded) graph; adjacency lists only.  Used for derived
/// graphs such as distance powers, where no embedding is meaningful.
struct AbstractGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    bool has_edge(int u, int v) const;
    int max_degree() const;
};

/// A facial walk traced from the rotation system.  `vertices` is the cyclic
/// sequence of vertex ids; the walk uses each directed edge of its face once.
struct FacialWalk {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    /// True if the walk visits `length()` pairwise distinct vertices (i.e. it
    /// bounds the face by a simple cycle).
    bool is_simple_cycle() const;
    bool contains(int v) const;
};

/// Plane graph: a simple graph together with a combinatorial embedding.
/// The neighbor list adj[v] is stored *in rotation order*, so the embedding
/// and the adjacency structure cannot drift apart.  Vertices are dense ids
/// 0..n-1.  Values are immutable after construction; all operations on them
/// are pure functions.
struct PlaneGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // adj[v] = neighbors of v in cyclic embedding order

    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int min_degree() const;
    int max_degree() const;
    bool has_edge(int u, int v) const;
    AbstractGraph abstract() const { return AbstractGraph{n, adj}; }
};

using Edge = std::pair<int, int>;

/// Builds a validated PlaneGraph.  With `rotation` given, the rotation lists
/// become the embedding and are checked against Euler's formula (per
/// component: n - E + F = 2).  Without it, a planar embedding is computed;
/// non-planar input raises NonPlanarError.
///
/// Face tracing convention, fixed once: the arc following (u -> v) is
/// (v -> w) where w is the cyclic successor of u in the rotation at v.
/// All results are independent of this orientation choice.
PlaneGraph build_graph(int n, const std::vector<Edge>& edges,
                       const std::optional<std::vector<std::vector<int>>>& rotation = std::nullopt);

/// All facial walks of the embedding.  Every directed edge appears in exactly
/// one walk, so the walk lengths sum to 2E.  Components without edges
/// contribute no walks.
std::vector<FacialWalk> faces(const PlaneGraph& g);

/// Length of a shortest odd cycle; nullopt for bipartite graphs.
std::optional<int> odd_girth(const PlaneGraph& g);

bool is_triangle_free(const PlaneGraph& g);
bool is_triangle_free(const AbstractGraph& g);

std::vector<int> cut_vertices(const PlaneGraph& g);

/// Connected, at least 3 vertices, and no cut vertex.  Throws
/// DisconnectedError when g is not connected.
bool is_two_connected(const PlaneGraph& g);

bool is_connected(const PlaneGraph& g);

/// Connected components as vertex lists (each sorted ascending).
std::vector<std::vector<int>> components(const PlaneGraph& g);

/// All 4-cycles that are not facial walks of the embedding.  For simple
/// triangle-free plane graphs 4-cycles are chordless, so this coincides with
/// "both sides of the cycle contain a vertex".  Cycles are returned as
/// 4-vertex sequences, lexicographically normalized.
std::vector<std::array<int, 4>> separating_four_cycles(const PlaneGraph& g);

constexpr int kInfiniteDistance = -1;

/// BFS distance from u to v avoiding `forbidden`; kInfiniteDistance when v is
/// unreachable.  u and v must not be forbidden.
int distance(const PlaneGraph& g, int u, int v, const std::vector<int>& forbidden = {});

/// Distance power: u ~ v iff 1 <= dist_g(u,v) <= radius.  For max degree <= 4
/// the output degree is < 4^(radius+1).
AbstractGraph power_graph(const PlaneGraph& g, int radius);

}  // namespace fraccol
