#include "fraccol/graph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "fraccol/errors.hpp"

namespace fraccol {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw MalformedInputError("vertex id " + std::to_string(v) + " out of range [0," +
                                  std::to_string(n) + ")");
}

// Position of `target` in rot, or -1.
int find_in(const std::vector<int>& rot, int target) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == target) return i;
    return -1;
}

std::vector<int> component_of(const std::vector<std::vector<int>>& adj, int start,
                              std::vector<char>& seen) {
    std::vector<int> comp, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

// Traces all facial walks of one rotation system.  Arcs are identified by
// (tail, head); the successor of arc (u,v) is (v, w) with w the cyclic
// successor of u in adj[v].
std::vector<FacialWalk> trace_walks(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::map<std::pair<int, int>, bool> used;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u]) used[{u, v}] = false;

    std::vector<FacialWalk> walks;
    for (auto& [arc, flag] : used) {
        if (flag) continue;
        FacialWalk walk;
        std::pair<int, int> cur = arc;
        do {
            used[cur] = true;
            walk.vertices.push_back(cur.first);
            int pos = find_in(adj[cur.second], cur.first);
            if (pos < 0) throw InvalidRotationError("rotation lists are not symmetric");
            const auto& rot = adj[cur.second];
            int next = rot[(pos + 1) % rot.size()];
            cur = {cur.second, next};
        } while (cur != arc);
        walks.push_back(std::move(walk));
    }
    return walks;
}

// Per-component genus-zero check: n_i - E_i + F_i = 2 for every component
// with at least one edge (edgeless components are trivially plane).
void check_euler(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<char> seen(n, 0);
    auto walks = trace_walks(adj);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        auto comp = component_of(adj, s, seen);
        long long edges = 0;
        for (int v : comp) edges += static_cast<long long>(adj[v].size());
        edges /= 2;
        if (edges == 0) continue;
        std::set<int> in_comp(comp.begin(), comp.end());
        long long fcount = 0;
        for (const auto& w : walks)
            if (in_comp.count(w.vertices.front())) ++fcount;
        if (static_cast<long long>(comp.size()) - edges + fcount != 2)
            throw InvalidRotationError("rotation system fails Euler's formula (component not plane)");
    }
}

std::vector<std::vector<int>> planar_embedding(int n, const std::vector<Edge>& edges) {
    using namespace boost;
    typedef adjacency_list<vecS, vecS, undirectedS, no_property, property<edge_index_t, int>> BoostG;
    BoostG bg(n);
    for (auto [u, v] : edges) add_edge(u, v, bg);
    auto e_index = get(edge_index, bg);
    int idx = 0;
    for (auto [ei, ei_end] = boost::edges(bg); ei != ei_end; ++ei) put(e_index, *ei, idx++);

    typedef std::vector<graph_traits<BoostG>::edge_descriptor> EdgeVec;
    std::vector<EdgeVec> embedding(n);
    bool planar = boyer_myrvold_planarity_test(
        boyer_myrvold_params::graph = bg,
        boyer_myrvold_params::embedding =
            make_iterator_property_map(embedding.begin(), get(vertex_index, bg)));
    if (!planar) throw NonPlanarError("graph admits no planar embedding");

    std::vector<std::vector<int>> rotation(n);
    for (int v = 0; v < n; ++v)
        for (const auto& e : embedding[v]) {
            int a = static_cast<int>(source(e, bg)), b = static_cast<int>(target(e, bg));
            rotation[v].push_back(a == v ? b : a);
        }
    return rotation;
}

}  // namespace

bool AbstractGraph::has_edge(int u, int v) const {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

int AbstractGraph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj) d = std::max<int>(d, static_cast<int>(nb.size()));
    return d;
}

bool FacialWalk::is_simple_cycle() const {
    std::set<int> distinct(vertices.begin(), vertices.end());
    return static_cast<int>(distinct.size()) == length();
}

bool FacialWalk::contains(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

int PlaneGraph::edge_count() const {
    long long total = 0;
    for (const auto& nb : adj) total += static_cast<long long>(nb.size());
    return static_cast<int>(total / 2);
}

int PlaneGraph::min_degree() const {
    int d = n == 0 ? 0 : degree(0);
    for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
    return d;
}

int PlaneGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

bool PlaneGraph::has_edge(int u, int v) const {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

PlaneGraph build_graph(int n, const std::vector<Edge>& edges,
                       const std::optional<std::vector<std::vector<int>>>& rotation) {
    if (n < 1) throw MalformedInputError("vertex count must be >= 1");
    std::set<std::pair<int, int>> edge_set;
    for (auto [u, v] : edges) {
        check_vertex(u, n);
        check_vertex(v, n);
        if (u == v) throw MalformedInputError("loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!edge_set.insert(key).second)
            throw MalformedInputError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    }

    PlaneGraph g;
    g.n = n;
    if (rotation) {
        if (static_cast<int>(rotation->size()) != n)
            throw MalformedInputError("rotation must list every vertex");
        // Each rotation list must be a permutation of the vertex's neighbor set.
        std::vector<std::set<int>> nbrs(n);
        for (auto [u, v] : edges) {
            nbrs[u].insert(v);
            nbrs[v].insert(u);
        }
        for (int v = 0; v < n; ++v) {
            std::set<int> listed((*rotation)[v].begin(), (*rotation)[v].end());
            if (listed != nbrs[v] || (*rotation)[v].size() != nbrs[v].size())
                throw InvalidRotationError("rotation at vertex " + std::to_string(v) +
                                           " is not a permutation of its neighbors");
        }
        g.adj = *rotation;
        check_euler(g.adj);
    } else {
        g.adj = planar_embedding(n, edges);
        check_euler(g.adj);  // sanity; the computed embedding must pass
    }
    return g;
}

std::vector<FacialWalk> faces(const PlaneGraph& g) { return trace_walks(g.adj); }

std::optional<int> odd_girth(const PlaneGraph& g) {
    // BFS in the bipartite double cover: the shortest odd closed walk through
    // s has length dist((s,0),(s,1)), and a shortest odd closed walk is a cycle.
    int best = kInfiniteDistance;
    for (int s = 0; s < g.n; ++s) {
        std::vector<std::array<int, 2>> dist(g.n, {kInfiniteDistance, kInfiniteDistance});
        std::deque<std::pair<int, int>> queue{{s, 0}};
        dist[s][0] = 0;
        while (!queue.empty()) {
            auto [v, parity] = queue.front();
            queue.pop_front();
            for (int u : g.adj[v]) {
                int np = 1 - parity;
                if (dist[u][np] == kInfiniteDistance) {
                    dist[u][np] = dist[v][parity] + 1;
                    queue.emplace_back(u, np);
                }
            }
        }
        if (dist[s][1] != kInfiniteDistance && (best == kInfiniteDistance || dist[s][1] < best))
            best = dist[s][1];
    }
    if (best == kInfiniteDistance) return std::nullopt;
    return best;
}

bool is_triangle_free(const AbstractGraph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            if (v < u) continue;
            for (int w : g.adj[v])
                if (w != u && g.has_edge(u, w)) return false;
        }
    return true;
}

bool is_triangle_free(const PlaneGraph& g) { return is_triangle_free(g.abstract()); }

namespace {

struct CutState {
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    int timer = 0;
    const std::vector<std::vector<int>>* adj;

    void dfs(int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int u : (*adj)[v]) {
            if (disc[u] == -1) {
                ++children;
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (parent != -1 && low[u] >= disc[v]) is_cut[v] = 1;
            } else if (u != parent) {
                low[v] = std::min(low[v], disc[u]);
            }
        }
        if (parent == -1 && children > 1) is_cut[v] = 1;
    }
};

}  // namespace

std::vector<int> cut_vertices(const PlaneGraph& g) {
    CutState st;
    st.disc.assign(g.n, -1);
    st.low.assign(g.n, -1);
    st.is_cut.assign(g.n, 0);
    st.adj = &g.adj;
    for (int v = 0; v < g.n; ++v)
        if (st.disc[v] == -1) st.dfs(v, -1);
    std::vector<int> result;
    for (int v = 0; v < g.n; ++v)
        if (st.is_cut[v]) result.push_back(v);
    return result;
}

bool is_connected(const PlaneGraph& g) {
    if (g.n == 0) return true;
    std::vector<char> seen(g.n, 0);
    return static_cast<int>(component_of(g.adj, 0, seen).size()) == g.n;
}

std::vector<std::vector<int>> components(const PlaneGraph& g) {
    std::vector<char> seen(g.n, 0);
    std::vector<std::vector<int>> result;
    for (int v = 0; v < g.n; ++v)
        if (!seen[v]) result.push_back(component_of(g.adj, v, seen));
    return result;
}

bool is_two_connected(const PlaneGraph& g) {
    if (!is_connected(g)) throw DisconnectedError("two-connectivity requires a connected graph");
    return g.n >= 3 && cut_vertices(g).empty();
}

std::vector<std::array<int, 4>> separating_four_cycles(const PlaneGraph& g) {
    // Enumerate 4-cycles a-b-c-d with a the minimum and b < d (one canonical
    // traversal per cycle), then drop those that bound a face.
    std::set<std::vector<int>> facial;
    for (const auto& w : faces(g)) {
        if (w.length() != 4 || !w.is_simple_cycle()) continue;
        // Normalize the cyclic sequence the same way the enumeration does.
        std::vector<int> vs = w.vertices;
        int apos = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
        std::vector<int> fwd, bwd;
        for (int i = 0; i < 4; ++i) fwd.push_back(vs[(apos + i) % 4]);
        for (int i = 0; i < 4; ++i) bwd.push_back(vs[(apos + 4 - i) % 4]);
        facial.insert(fwd[1] < fwd[3] ? fwd : bwd);
    }

    std::vector<std::array<int, 4>> result;
    for (int a = 0; a < g.n; ++a)
        for (int b : g.adj[a]) {
            if (b <= a) continue;
            for (int c : g.adj[b]) {
                if (c <= a || c == b) continue;
                for (int d : g.adj[c])
                    if (d > b && d != a && d != c && g.has_edge(d, a)) {
                        std::vector<int> cyc{a, b, c, d};
                        if (!facial.count(cyc)) result.push_back({a, b, c, d});
                    }
            }
        }
    return result;
}

int distance(const PlaneGraph& g, int u, int v, const std::vector<int>& forbidden) {
    check_vertex(u, g.n);
    check_vertex(v, g.n);
    std::vector<char> blocked(g.n, 0);
    for (int f : forbidden) {
        check_vertex(f, g.n);
        blocked[f] = 1;
    }
    if (blocked[u] || blocked[v])
        throw MalformedInputError("distance endpoints must not be forbidden");
    std::vector<int> dist(g.n, kInfiniteDistance);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) return dist[x];
        for (int y : g.adj[x])
            if (!blocked[y] && dist[y] == kInfiniteDistance) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return kInfiniteDistance;
}

AbstractGraph power_graph(const PlaneGraph& g, int radius) {
    if (radius < 1) throw ParamOutOfRangeError("power radius must be >= 1");
    AbstractGraph out;
    out.n = g.n;
    out.adj.resize(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, kInfiniteDistance);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (dist[v] == radius) continue;
            for (int u : g.adj[v])
                if (dist[u] == kInfiniteDistance) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
        }
        for (int v = 0; v < g.n; ++v)
            if (v != s && dist[v] != kInfiniteDistance && dist[v] <= radius)
                out.adj[s].push_back(v);
    }
    return out;
}

}  // namespace fraccol
