#include "fraccol/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fraccol/errors.hpp"

namespace fraccol {

// ---------------------------------------------------------------------------
// ColorSet

ColorSet ColorSet::range(const Integer& lo, const Integer& hi) {
    ColorSet s;
    if (lo < hi) s.runs_.push_back({lo, hi});
    return s;
}

ColorSet ColorSet::of(const std::vector<long long>& values) {
    std::vector<long long> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    ColorSet s;
    for (long long v : sorted) {
        Integer iv(v);
        if (!s.runs_.empty() && s.runs_.back().second == iv)
            s.runs_.back().second = iv + 1;
        else
            s.runs_.push_back({iv, iv + 1});
    }
    return s;
}

void ColorSet::normalize() {
    std::sort(runs_.begin(), runs_.end());
    std::vector<Run> merged;
    for (const auto& r : runs_) {
        if (r.first >= r.second) continue;
        if (!merged.empty() && merged.back().second >= r.first)
            merged.back().second = std::max(merged.back().second, r.second);
        else
            merged.push_back(r);
    }
    runs_ = std::move(merged);
}

Integer ColorSet::size() const {
    Integer total = 0;
    for (const auto& [lo, hi] : runs_) total += hi - lo;
    return total;
}

bool ColorSet::contains(const Integer& c) const {
    for (const auto& [lo, hi] : runs_)
        if (lo <= c && c < hi) return true;
    return false;
}

bool ColorSet::intersects(const ColorSet& other) const {
    size_t i = 0, j = 0;
    while (i < runs_.size() && j < other.runs_.size()) {
        const auto& a = runs_[i];
        const auto& b = other.runs_[j];
        if (a.second <= b.first)
            ++i;
        else if (b.second <= a.first)
            ++j;
        else
            return true;
    }
    return false;
}

ColorSet ColorSet::unite(const ColorSet& other) const {
    ColorSet out;
    out.runs_ = runs_;
    out.runs_.insert(out.runs_.end(), other.runs_.begin(), other.runs_.end());
    out.normalize();
    return out;
}

ColorSet ColorSet::subtract(const ColorSet& other) const {
    ColorSet out;
    for (const auto& r : runs_) {
        Integer lo = r.first;
        for (const auto& b : other.runs_) {
            if (b.second <= lo) continue;
            if (b.first >= r.second) break;
            if (b.first > lo) out.runs_.push_back({lo, b.first});
            lo = std::max(lo, b.second);
            if (lo >= r.second) break;
        }
        if (lo < r.second) out.runs_.push_back({lo, r.second});
    }
    out.normalize();
    return out;
}

ColorSet ColorSet::intersect(const ColorSet& other) const {
    ColorSet out;
    size_t i = 0, j = 0;
    while (i < runs_.size() && j < other.runs_.size()) {
        const auto& a = runs_[i];
        const auto& b = other.runs_[j];
        Integer lo = std::max(a.first, b.first), hi = std::min(a.second, b.second);
        if (lo < hi) out.runs_.push_back({lo, hi});
        if (a.second < b.second)
            ++i;
        else
            ++j;
    }
    return out;
}

ColorSet ColorSet::take_front(const Integer& k) const {
    if (k > size()) throw InternalInvariantError("take_front past end of color set");
    ColorSet out;
    Integer need = k;
    for (const auto& [lo, hi] : runs_) {
        if (need == 0) break;
        Integer len = std::min(hi - lo, need);
        out.runs_.push_back({lo, lo + len});
        need -= len;
    }
    return out;
}

ColorSet ColorSet::complement_within(const Integer& n) const {
    return range(1, n + 1).subtract(*this);
}

std::vector<long long> ColorSet::values(long long limit) const {
    if (size() > limit)
        throw InternalInvariantError("color set too large to expand element-wise");
    std::vector<long long> out;
    for (const auto& [lo, hi] : runs_)
        for (Integer c = lo; c < hi; ++c) out.push_back(c.convert_to<long long>());
    return out;
}

ColorSet map_through(const ColorSet& s, const ColorSet& from, const ColorSet& to) {
    if (from.size() != to.size())
        throw InternalInvariantError("map_through requires equal-size domain and image");
    ColorSet part = s.intersect(from);
    // Walk `from` and `to` in parallel, translating each piece of `part` by
    // its offset within the order isomorphism.
    ColorSet out;
    auto from_runs = from.runs();
    auto to_runs = to.runs();
    for (const auto& [plo, phi] : part.runs()) {
        Integer cursor = plo;
        while (cursor < phi) {
            // Rank of `cursor` inside `from`.
            Integer rank = 0;
            Integer run_left = 0;
            for (const auto& [flo, fhi] : from_runs) {
                if (cursor >= fhi) {
                    rank += fhi - flo;
                    continue;
                }
                rank += cursor - flo;
                run_left = std::min(fhi, phi) - cursor;
                break;
            }
            // Locate rank inside `to`, copying as much of the run as fits.
            Integer skip = rank;
            for (const auto& [tlo, thi] : to_runs) {
                Integer len = thi - tlo;
                if (skip >= len) {
                    skip -= len;
                    continue;
                }
                Integer chunk = std::min(run_left, len - skip);
                out = out.unite(ColorSet::range(tlo + skip, tlo + skip + chunk));
                cursor += chunk;
                run_left -= chunk;
                if (run_left == 0) break;
                skip = 0;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Demands and weights

DemandFunction DemandFunction::constant(int n, const Rational& x) {
    return DemandFunction{std::vector<Rational>(n, x)};
}

WeightFunction WeightFunction::uniform(int n, const Rational& x) {
    return WeightFunction{std::vector<Rational>(n, x)};
}

Rational WeightFunction::total() const {
    Rational s = 0;
    for (const auto& v : values) s += v;
    return s;
}

Rational WeightFunction::sum_over(const std::vector<int>& vertices) const {
    Rational s = 0;
    for (int v : vertices) s += values[v];
    return s;
}

Rational WeightFunction::demand_weight(const DemandFunction& f) const {
    Rational s = 0;
    for (size_t v = 0; v < values.size(); ++v) s += values[v] * f.values[v];
    return s;
}

void WeightFunction::validate() const {
    for (const auto& v : values)
        if (v <= 0) throw MalformedInputError("weights must be strictly positive");
}

// ---------------------------------------------------------------------------
// Set colorings

SetColoring SetColoring::rescaled(const Integer& factor) const {
    if (factor < 1) throw InternalInvariantError("rescale factor must be >= 1");
    if (factor == 1) return *this;
    SetColoring out;
    out.N = N * factor;
    out.sets.reserve(sets.size());
    for (const auto& s : sets) {
        ColorSet scaled;
        for (const auto& [lo, hi] : s.runs())
            scaled = scaled.unite(ColorSet::range((lo - 1) * factor + 1, (hi - 1) * factor + 1));
        out.sets.push_back(std::move(scaled));
    }
    return out;
}

ColoringCheck verify_set_coloring(const PlaneGraph& g, const DemandFunction& f,
                                  const SetColoring& c) {
    if (f.size() != g.n || c.size() != g.n)
        throw MalformedInputError("demand/coloring size does not match the graph");
    for (int v = 0; v < g.n; ++v) {
        const Rational need = f(v) * Rational(c.N);
        if (denominator(need) != 1)
            throw NotCommonDenominatorError("N=" + c.N.str() + " is not a common denominator of f");
    }

    ColoringCheck result;
    for (int v = 0; v < g.n; ++v) {
        const auto& s = c.sets[v];
        for (const auto& [lo, hi] : s.runs())
            if (lo < 1 || hi > c.N + 1) {
                result.violation = "vertex " + std::to_string(v) + " uses colors outside 1.." + c.N.str();
                return result;
            }
    }
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) {
            if (u < v) continue;
            if (c.sets[v].intersects(c.sets[u])) {
                result.violation =
                    "edge " + std::to_string(v) + "-" + std::to_string(u) + " has overlapping color sets";
                return result;
            }
        }
    bool tight = true;
    for (int v = 0; v < g.n; ++v) {
        Integer have = c.sets[v].size();
        Integer need = numerator(f(v) * Rational(c.N));
        if (have < need) {
            result.violation = "vertex " + std::to_string(v) + " has " + have.str() +
                               " colors, needs " + need.str();
            return result;
        }
        if (have != need) tight = false;
    }
    result.valid = true;
    result.tight = tight;
    return result;
}

SetColoring trim_to_tight(const PlaneGraph& g, const DemandFunction& f, const SetColoring& c) {
    auto check = verify_set_coloring(g, f, c);
    if (!check.valid) throw NotTightError("cannot trim an invalid coloring: " + check.violation);
    SetColoring out;
    out.N = c.N;
    out.sets.reserve(c.sets.size());
    for (int v = 0; v < g.n; ++v)
        out.sets.push_back(c.sets[v].take_front(numerator(f(v) * Rational(c.N))));
    return out;
}

// ---------------------------------------------------------------------------
// Exact 3-coloring searches

bool ProperColoring::is_proper(const PlaneGraph& g) const {
    if (static_cast<int>(colors.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v) {
        if (colors[v] < 1 || colors[v] > 3) return false;
        for (int u : g.adj[v])
            if (colors[u] == colors[v]) return false;
    }
    return true;
}

namespace {

struct ThreeColorSearch {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> color;       // 0 = unset
    std::vector<int> forbidden;   // bitmask of colors used by assigned neighbors
    long long nodes = 0, node_limit;

    ThreeColorSearch(const std::vector<std::vector<int>>& a, long long limit)
        : adj(a), color(a.size(), 0), forbidden(a.size(), 0), node_limit(limit) {}

    static int popcount3(int mask) { return ((mask >> 0) & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1); }

    bool run() {
        if (++nodes > node_limit) throw BudgetExceededError("3-coloring search exceeded its node budget");
        // Most-constrained vertex first; singleton domains propagate naturally.
        int best = -1, best_free = 4;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
            if (color[v]) continue;
            int free = 3 - popcount3(forbidden[v]);
            if (free == 0) return false;
            if (free < best_free || (free == best_free && best == -1)) {
                best_free = free;
                best = v;
            }
        }
        if (best == -1) return true;
        for (int c = 1; c <= 3; ++c) {
            if (forbidden[best] & (1 << (c - 1))) continue;
            color[best] = c;
            std::vector<int> bumped;
            for (int u : adj[best])
                if (!color[u] && !(forbidden[u] & (1 << (c - 1)))) {
                    forbidden[u] |= 1 << (c - 1);
                    bumped.push_back(u);
                }
            if (run()) return true;
            for (int u : bumped) forbidden[u] &= ~(1 << (c - 1));
            color[best] = 0;
        }
        return false;
    }
};

}  // namespace

ProperColoring three_coloring(const PlaneGraph& g, const Budget& budget) {
    ThreeColorSearch search(g.adj, budget.coloring_nodes);
    if (!search.run())
        throw NoColoringError("no proper 3-coloring exists (precondition violated?)");
    return ProperColoring{std::move(search.color)};
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ProperColoring mono_neighborhood_coloring(const PlaneGraph& g, const std::vector<int>& X,
                                          const Budget& budget, MonoMode mode) {
    for (int x : X)
        if (x < 0 || x >= g.n) throw MalformedInputError("constrained vertex out of range");

    // Contract each constrained neighborhood to one search vertex; the
    // monochromaticity constraint becomes ordinary properness on the quotient.
    UnionFind uf(g.n);
    if (mode == MonoMode::Global) {
        int anchor = -1;
        for (int x : X)
            for (int u : g.adj[x]) {
                if (anchor < 0) anchor = u;
                uf.unite(u, anchor);
            }
    } else {
        for (int x : X)
            for (int u : g.adj[x]) uf.unite(u, g.adj[x].front());
    }

    std::map<int, int> root_to_id;
    std::vector<int> quotient_of(g.n);
    for (int v = 0; v < g.n; ++v) {
        int r = uf.find(v);
        auto it = root_to_id.find(r);
        if (it == root_to_id.end()) it = root_to_id.emplace(r, static_cast<int>(root_to_id.size())).first;
        quotient_of[v] = it->second;
    }
    int qn = static_cast<int>(root_to_id.size());
    std::vector<std::set<int>> qadj_sets(qn);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) {
            int a = quotient_of[v], b = quotient_of[u];
            if (a == b)
                throw NoColoringError("two vertices forced to one color are adjacent");
            qadj_sets[a].insert(b);
        }
    std::vector<std::vector<int>> qadj(qn);
    for (int v = 0; v < qn; ++v) qadj[v].assign(qadj_sets[v].begin(), qadj_sets[v].end());

    ThreeColorSearch search(qadj, budget.coloring_nodes);
    if (!search.run())
        throw NoColoringError("no 3-coloring satisfies the monochromatic-neighborhood constraints");

    ProperColoring out;
    out.colors.resize(g.n);
    for (int v = 0; v < g.n; ++v) out.colors[v] = search.color[quotient_of[v]];
    return out;
}

LiftedColoring lift_mono_coloring(const PlaneGraph& g, const std::vector<int>& X,
                                  const ProperColoring& c) {
    if (!c.is_proper(g)) throw NotMonochromaticError("input coloring is not a proper 3-coloring");
    std::set<int> xs(X.begin(), X.end());
    if (xs.size() != X.size()) throw MalformedInputError("constrained vertex set has duplicates");
    std::set<int> touched;
    for (int x : X) {
        for (int other : X)
            if (other != x && g.has_edge(x, other))
                throw NotMonochromaticError("constrained vertices must be pairwise non-adjacent");
        for (int u : g.adj[x])
            if (!touched.insert(u).second)
                throw NotMonochromaticError("constrained neighborhoods must be pairwise disjoint");
    }

    LiftedColoring out;
    out.demand.values.assign(g.n, Rational(1, 3));
    out.coloring.N = 3;
    out.coloring.sets.resize(g.n);
    for (int v = 0; v < g.n; ++v)
        if (!xs.count(v)) out.coloring.sets[v] = ColorSet::of({c(v)});
    for (int x : X) {
        out.demand.values[x] = Rational(2, 3);
        int shared = g.degree(x) ? c(g.adj[x].front()) : 3;
        for (int u : g.adj[x])
            if (c(u) != shared)
                throw NotMonochromaticError("neighborhood of vertex " + std::to_string(x) +
                                            " is not monochromatic");
        out.coloring.sets[x] = ColorSet::range(1, 4).subtract(ColorSet::of({shared}));
    }
    return out;
}

BestClass best_color_class(const PlaneGraph& g, const SetColoring& c, const WeightFunction& w) {
    if (c.size() != g.n || w.size() != g.n)
        throw MalformedInputError("coloring/weight size does not match the graph");
    // Colors sharing the same membership pattern form atoms; sweep atoms in
    // color order, so ties break toward the smallest color index.
    std::set<Integer> cuts{Integer(1), c.N + 1};
    for (const auto& s : c.sets)
        for (const auto& [lo, hi] : s.runs()) {
            cuts.insert(lo);
            cuts.insert(hi);
        }
    BestClass best;
    best.weight = Rational(-1);
    auto it = cuts.begin();
    for (Integer prev = *it++; it != cuts.end(); prev = *it++) {
        if (prev >= c.N + 1) break;
        std::vector<int> members;
        Rational weight = 0;
        for (int v = 0; v < g.n; ++v)
            if (c.sets[v].contains(prev)) {
                members.push_back(v);
                weight += w(v);
            }
        if (weight > best.weight) {
            best.weight = weight;
            best.vertices = members;
            best.color = prev;
        }
    }
    // Classes are independent sets by edge disjointness; defend anyway.
    for (size_t i = 0; i < best.vertices.size(); ++i)
        for (size_t j = i + 1; j < best.vertices.size(); ++j)
            if (g.has_edge(best.vertices[i], best.vertices[j]))
                throw InternalInvariantError("color class is not independent");
    return best;
}

}  // namespace fraccol
