#include "fraccol/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "fraccol/errors.hpp"

namespace fraccol {

namespace {

// Rotation lists with edge identities, so that a specific copy of a parallel
// edge can be removed from both endpoints consistently during surgery.
struct Surgery {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> rot;  // (neighbor, edge id)
    int next_edge = 0;

    static Surgery from(const PlaneGraph& g) {
        Surgery s;
        s.n = g.n;
        s.rot.resize(g.n);
        std::map<std::pair<int, int>, int> ids;
        for (int v = 0; v < g.n; ++v)
            for (int u : g.adj[v]) {
                auto key = std::minmax(u, v);
                auto it = ids.find(key);
                if (it == ids.end()) it = ids.emplace(key, s.next_edge++).first;
                s.rot[v].emplace_back(u, it->second);
            }
        return s;
    }

    // Drops edge ids and validates the embedding via Euler's formula.
    PlaneGraph to_plane_graph() const {
        std::vector<std::vector<int>> adj(n);
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            for (auto [u, e] : rot[v]) {
                adj[v].push_back(u);
                if (u > v) edges.emplace_back(v, u);
            }
        return build_graph(n, edges, adj);
    }
};

// Linearizes a cyclic rotation list starting at position `start`.
std::vector<std::pair<int, int>> rotate_from(const std::vector<std::pair<int, int>>& rot, int start) {
    std::vector<std::pair<int, int>> out;
    int d = static_cast<int>(rot.size());
    out.reserve(d);
    for (int i = 0; i < d; ++i) out.push_back(rot[(start + i) % d]);
    return out;
}

int neighbor_pos(const std::vector<std::pair<int, int>>& rot, int target) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i].first == target) return i;
    return -1;
}

// Core identification.  open_u / open_v give, for each endpoint, the rotation
// position at which the cyclic list is opened (the new list starts there);
// -1 means "anywhere" (used when u and v lie in different components).
Reduced identify_spliced(const PlaneGraph& g, int u, int v, int open_u, int open_v) {
    Surgery s = Surgery::from(g);

    auto ru = rotate_from(s.rot[u], open_u < 0 ? 0 : open_u);
    auto rv = rotate_from(s.rot[v], open_v < 0 ? 0 : open_v);
    ru.insert(ru.end(), rv.begin(), rv.end());

    // Relabel: merged vertex takes u's slot, v disappears, ids above v shift.
    std::vector<int> map(g.n);
    for (int x = 0; x < g.n; ++x) map[x] = x < v ? x : (x == v ? u : x - 1);
    if (u > v) map[u] = u - 1;
    map[v] = map[u];
    int merged = map[u];

    Surgery t;
    t.n = g.n - 1;
    t.next_edge = s.next_edge;
    t.rot.resize(t.n);
    for (int x = 0; x < g.n; ++x) {
        if (x == u || x == v) continue;
        auto& out = t.rot[map[x]];
        for (auto [nb, e] : s.rot[x]) out.emplace_back(map[nb], e);
    }
    auto& rm = t.rot[merged];
    for (auto [nb, e] : ru) rm.emplace_back(map[nb], e);

    // Merge parallel edges: keep the first copy per neighbor, remove the rest
    // from both rotation lists.  (Removing an edge never breaks planarity.)
    std::set<int> seen_neighbors, dead_edges;
    for (auto it = rm.begin(); it != rm.end();) {
        if (!seen_neighbors.insert(it->first).second) {
            dead_edges.insert(it->second);
            it = rm.erase(it);
        } else {
            ++it;
        }
    }
    if (!dead_edges.empty())
        for (int x = 0; x < t.n; ++x) {
            if (x == merged) continue;
            auto& r = t.rot[x];
            r.erase(std::remove_if(r.begin(), r.end(),
                                   [&](const std::pair<int, int>& p) { return dead_edges.count(p.second) > 0; }),
                    r.end());
        }

    return Reduced{t.to_plane_graph(), map};
}

// Identifies walk[pu] with walk[pv], opening each rotation at the corner the
// walk makes there.  At walk position p the face enters from walk[p-1] and
// leaves toward walk[p+1]; the tracing rule makes walk[p+1] the cyclic
// successor of walk[p-1], so opening at walk[p+1] linearizes the rotation as
// [walk[p+1] ... walk[p-1]] and the splice inserts the other vertex's
// rotation inside this face.
Reduced identify_on_walk(const PlaneGraph& g, const FacialWalk& walk, int pu, int pv) {
    int r = walk.length();
    int u = walk.vertices[pu], v = walk.vertices[pv];
    if (u == v) throw MalformedInputError("cannot identify a vertex with itself");
    if (g.has_edge(u, v)) throw AdjacentPairError("identifying adjacent vertices would create a loop");
    int bu = walk.vertices[(pu + 1) % r], bv = walk.vertices[(pv + 1) % r];
    int open_u = -1, open_v = -1;
    // Locate the occurrence of the corner in the rotation: position of the
    // outgoing neighbor.  For simple graphs the neighbor id is unambiguous.
    for (int i = 0; i < g.degree(u); ++i)
        if (g.adj[u][i] == bu) open_u = i;
    for (int i = 0; i < g.degree(v); ++i)
        if (g.adj[v][i] == bv) open_v = i;
    if (open_u < 0 || open_v < 0) throw InternalInvariantError("walk corner not found in rotation");
    return identify_spliced(g, u, v, open_u, open_v);
}

bool same_component(const PlaneGraph& g, int u, int v) {
    return distance(g, u, v) != kInfiniteDistance;
}

}  // namespace

std::vector<int> compose_maps(const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> out(first.size());
    for (size_t i = 0; i < first.size(); ++i)
        out[i] = first[i] < 0 ? -1 : second[first[i]];
    return out;
}

Reduced identify_vertices(const PlaneGraph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v)
        throw MalformedInputError("identify_vertices needs two distinct valid vertices");
    if (g.has_edge(u, v)) throw AdjacentPairError("identifying adjacent vertices would create a loop");

    if (!same_component(g, u, v)) {
        // Distinct components join at the merged vertex; any splice is plane.
        return identify_spliced(g, u, v, -1, -1);
    }
    for (const auto& walk : faces(g)) {
        int pu = -1, pv = -1;
        for (int i = 0; i < walk.length(); ++i) {
            if (pu < 0 && walk.vertices[i] == u) pu = i;
            if (pv < 0 && walk.vertices[i] == v) pv = i;
        }
        if (pu >= 0 && pv >= 0) return identify_on_walk(g, walk, pu, pv);
    }
    throw NoCommonFaceError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                            " share no face");
}

FoldResult fold_face(const PlaneGraph& g, const FacialWalk& face) {
    auto girth = odd_girth(g);
    int r = face.length();
    if (girth && *girth == r)
        throw FaceLengthEqualsGirthError("face length equals the odd girth; fold does not apply");

    for (int i = 0; i < r; ++i) {
        int pu = (i + r - 1) % r, pv = (i + 1) % r;
        int u = face.vertices[pu], v = face.vertices[pv];
        if (u == v || g.has_edge(u, v)) continue;
        Reduced child = identify_on_walk(g, face, pu, pv);
        if (odd_girth(child.graph) == girth) return FoldResult{std::move(child), i};
    }
    throw NoValidIndexError("no fold index preserves the odd girth (violated precondition?)");
}

Reduced induced_subgraph(const PlaneGraph& g, const std::vector<int>& keep) {
    std::vector<int> map(g.n, -1);
    int next = 0;
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
        if (v < 0 || v >= g.n || map[v] != -1) throw MalformedInputError("bad vertex subset");
        map[v] = next++;
    }
    PlaneGraph child;
    child.n = next;
    child.adj.resize(next);
    for (int v : sorted)
        for (int u : g.adj[v])
            if (map[u] != -1) child.adj[map[v]].push_back(map[u]);
    // Restriction of a plane embedding is plane; no re-validation needed.
    return Reduced{std::move(child), std::move(map)};
}

Reduced delete_vertex(const PlaneGraph& g, int v) {
    if (v < 0 || v >= g.n) throw MalformedInputError("delete_vertex: bad vertex");
    std::vector<int> keep;
    keep.reserve(g.n - 1);
    for (int x = 0; x < g.n; ++x)
        if (x != v) keep.push_back(x);
    return induced_subgraph(g, keep);
}

SplitResult split_at_cut_vertex(const PlaneGraph& g, int v) {
    auto cuts = cut_vertices(g);
    if (std::find(cuts.begin(), cuts.end(), v) == cuts.end())
        throw NotCutVertexError("vertex " + std::to_string(v) + " is not a cut vertex");

    Reduced without = delete_vertex(g, v);
    auto comps = components(without.graph);
    // First child: one component of g-v plus v; second child: everything else.
    std::vector<int> side_a{v}, side_b{v};
    std::vector<char> in_first(g.n, 0);
    for (int child_id : comps.front())
        for (int x = 0; x < g.n; ++x)
            if (without.map[x] == child_id) {
                side_a.push_back(x);
                in_first[x] = 1;
            }
    for (int x = 0; x < g.n; ++x)
        if (x != v && !in_first[x]) side_b.push_back(x);

    Reduced a = induced_subgraph(g, side_a);
    Reduced b = induced_subgraph(g, side_b);
    return SplitResult{std::move(a.graph), std::move(b.graph), std::move(a.map), std::move(b.map)};
}

namespace {

// True if g - removed has a path of exactly three edges joining a and b.
bool has_three_edge_path(const PlaneGraph& g, int a, int b, const std::vector<char>& removed) {
    for (int p : g.adj[a]) {
        if (removed[p] || p == b) continue;
        for (int q : g.adj[p]) {
            if (removed[q] || q == a || q == b) continue;
            if (g.has_edge(q, b)) return true;
        }
    }
    return false;
}

}  // namespace

bool is_safe_face(const PlaneGraph& g, const SafeFace& sf) {
    std::set<int> ring_set(sf.ring.begin(), sf.ring.end());
    if (ring_set.size() != 5) return false;
    for (int i = 0; i < 5; ++i)
        if (!g.has_edge(sf.ring[i], sf.ring[(i + 1) % 5])) return false;

    for (int i = 0; i < 4; ++i) {
        int v = sf.ring[i];
        if (g.degree(v) != 3) return false;
        // outside[i] must be v's unique neighbor off the face.
        int external = -1;
        for (int u : g.adj[v])
            if (!ring_set.count(u)) external = external < 0 ? u : -2;
        if (external < 0 || external != sf.outside[i]) return false;
    }

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (sf.outside[i] == sf.outside[j]) return false;
            if (g.has_edge(sf.outside[i], sf.outside[j])) return false;
        }

    std::vector<int> removed(sf.ring.begin(), sf.ring.begin() + 4);
    int d = distance(g, sf.outside[1], sf.ring[4], removed);
    if (d != kInfiniteDistance && d < 4) return false;

    std::vector<char> removed_mask(g.n, 0);
    for (int v : removed) removed_mask[v] = 1;
    if (has_three_edge_path(g, sf.outside[2], sf.outside[3], removed_mask)) return false;
    return true;
}

std::vector<SafeFace> find_safe_faces(const PlaneGraph& g) {
    std::vector<SafeFace> result;
    std::set<std::pair<std::array<int, 5>, std::array<int, 4>>> seen;
    for (const auto& walk : faces(g)) {
        if (walk.length() != 5 || !walk.is_simple_cycle()) continue;
        std::set<int> ring_set(walk.vertices.begin(), walk.vertices.end());
        // The role assignment is asymmetric: try all 5 rotations in both
        // directions (10 symmetries of the pentagon).
        for (int reflect = 0; reflect < 2; ++reflect)
            for (int shift = 0; shift < 5; ++shift) {
                SafeFace sf;
                for (int i = 0; i < 5; ++i) {
                    int idx = reflect ? (shift + 5 - i) % 5 : (shift + i) % 5;
                    sf.ring[i] = walk.vertices[idx];
                }
                bool roles_ok = true;
                for (int i = 0; i < 4 && roles_ok; ++i) {
                    int v = sf.ring[i];
                    if (g.degree(v) != 3) {
                        roles_ok = false;
                        break;
                    }
                    int external = -1;
                    for (int u : g.adj[v])
                        if (!ring_set.count(u)) external = u;
                    if (external < 0) {
                        roles_ok = false;
                        break;
                    }
                    sf.outside[i] = external;
                }
                if (!roles_ok || !is_safe_face(g, sf)) continue;
                if (seen.insert({sf.ring, sf.outside}).second) result.push_back(sf);
            }
    }
    return result;
}

Reduced collapse_safe_face(const PlaneGraph& g, const SafeFace& sf) {
    if (!is_safe_face(g, sf)) throw NotSafeError("face fails the safety conditions");

    std::vector<int> keep;
    std::set<int> removed(sf.ring.begin(), sf.ring.begin() + 4);
    for (int x = 0; x < g.n; ++x)
        if (!removed.count(x)) keep.push_back(x);
    Reduced cut = induced_subgraph(g, keep);

    Reduced merged1 = identify_vertices(cut.graph, cut.map[sf.outside[1]], cut.map[sf.ring[4]]);
    std::vector<int> map1 = compose_maps(cut.map, merged1.map);
    Reduced merged2 = identify_vertices(merged1.graph, map1[sf.outside[2]], map1[sf.outside[3]]);
    std::vector<int> map_full = compose_maps(map1, merged2.map);

    if (merged2.graph.n != g.n - 6)
        throw InternalInvariantError("safe-face collapse must remove exactly six vertices");
    if (!is_triangle_free(merged2.graph))
        throw TriangleCreatedError("collapse created a triangle (logic bug or unsafe input)");
    return Reduced{std::move(merged2.graph), std::move(map_full)};
}

}  // namespace fraccol
