#include "fraccol/proof.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "fraccol/bounds.hpp"
#include "fraccol/errors.hpp"

namespace fraccol {

std::string to_string(OracleCase c) {
    switch (c) {
        case OracleCase::HeavyVertex: return "HeavyVertex";
        case OracleCase::CutSplit: return "CutSplit";
        case OracleCase::Fold: return "Fold";
        case OracleCase::Deg2Extend: return "Deg2Extend";
        case OracleCase::SafeFaceExtend: return "SafeFaceExtend";
        case OracleCase::BaseLP: return "BaseLP";
        case OracleCase::ClassPartition: return "ClassPartition";
    }
    return "?";
}

std::string to_string(ReductionReport::Rule r) {
    switch (r) {
        case ReductionReport::Rule::NotTwoConnected: return "NotTwoConnected";
        case ReductionReport::Rule::NonPentagonalFace: return "NonPentagonalFace";
        case ReductionReport::Rule::DegreeAtMostTwo: return "DegreeAtMostTwo";
        case ReductionReport::Rule::SafeFacePresent: return "SafeFacePresent";
    }
    return "?";
}

namespace {

void require_triangle_free(const PlaneGraph& g, const char* who) {
    if (!is_triangle_free(g)) throw MalformedInputError(std::string(who) + " requires a triangle-free graph");
}

// Deterministic memo key: the LP result depends on the labeled graph only,
// not on its embedding.
std::string graph_key(const PlaneGraph& g) {
    std::ostringstream os;
    os << g.n << ':';
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v])
            if (u > v) os << v << '-' << u << ',';
    return os.str();
}

OracleCertificate finish_certificate(const PlaneGraph& g, const WeightFunction& w,
                                     OracleCase taken, BestClass best,
                                     const Rational& threshold) {
    if (best.weight < threshold)
        throw InternalInvariantError("oracle produced a set below its guarantee (case " +
                                     to_string(taken) + ")");
    OracleCertificate cert;
    cert.taken = taken;
    cert.independent_set = std::move(best.vertices);
    cert.set_weight = best.weight;
    cert.threshold = threshold;
    (void)g;
    (void)w;
    return cert;
}

}  // namespace

OracleCertificate heavy_vertex_oracle(const PlaneGraph& g, const WeightFunction& w,
                                      const Budget& budget) {
    require_triangle_free(g, "heavy_vertex_oracle");
    if (g.max_degree() > 4)
        throw MalformedInputError("heavy_vertex_oracle requires maximum degree <= 4");
    if (w.size() != g.n) throw MalformedInputError("weight size does not match the graph");
    w.validate();

    int heavy = 0;
    for (int v = 1; v < g.n; ++v)
        if (w(v) > w(heavy)) heavy = v;

    auto coloring = mono_neighborhood_coloring(g, {heavy}, budget);
    auto lifted = lift_mono_coloring(g, {heavy}, coloring);
    auto best = best_color_class(g, lifted.coloring, w);

    Rational threshold = (w.total() + w(heavy)) / 3;
    auto cert = finish_certificate(g, w, OracleCase::HeavyVertex, std::move(best), threshold);
    cert.vertex = heavy;
    return cert;
}

OracleCertificate class_partition_oracle(const PlaneGraph& g, const WeightFunction& w,
                                         int distance_radius, const Budget& budget) {
    require_triangle_free(g, "class_partition_oracle");
    if (g.max_degree() > 4)
        throw MalformedInputError("class_partition_oracle requires maximum degree <= 4");
    if (!separating_four_cycles(g).empty())
        throw MalformedInputError("class_partition_oracle requires no separating 4-cycles");
    if (w.size() != g.n) throw MalformedInputError("weight size does not match the graph");
    w.validate();
    if (distance_radius < 4) throw ParamOutOfRangeError("locality radius must be >= 4");

    // Vertices in one greedy color class of the distance power are pairwise
    // far apart, so their neighborhoods can be constrained independently.
    AbstractGraph power = power_graph(g, distance_radius - 1);
    std::vector<int> cls(g.n, -1);
    int classes = 0;
    for (int v = 0; v < g.n; ++v) {
        std::vector<char> used(g.n + 1, 0);
        for (int u : power.adj[v])
            if (cls[u] >= 0) used[cls[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        cls[v] = c;
        classes = std::max(classes, c + 1);
    }
    Integer pow4 = 1;
    for (int i = 0; i < distance_radius; ++i) pow4 *= 4;
    if (Integer(classes) > pow4)
        throw InternalInvariantError("distance-power coloring used more classes than its degree bound");

    std::vector<int> heaviest;
    Rational heaviest_weight = -1;
    for (int c = 0; c < classes; ++c) {
        std::vector<int> members;
        Rational cw = 0;
        for (int v = 0; v < g.n; ++v)
            if (cls[v] == c) {
                members.push_back(v);
                cw += w(v);
            }
        if (cw > heaviest_weight) {
            heaviest_weight = cw;
            heaviest = members;
        }
    }
    // Pigeonhole over at most 4^D classes.
    if (heaviest_weight * Rational(pow4) < w.total())
        throw InternalInvariantError("heaviest class beats the pigeonhole bound by construction");

    ProperColoring coloring;
    try {
        coloring = mono_neighborhood_coloring(g, heaviest, budget);
    } catch (const NoColoringError& e) {
        throw MonoColoringFailedError(std::string("the locality radius was too small: ") + e.what());
    }
    auto lifted = lift_mono_coloring(g, heaviest, coloring);
    auto best = best_color_class(g, lifted.coloring, w);

    Rational threshold = (Rational(1, 3) + margin0_deg4_nosep(distance_radius)) * w.total();
    // The lift also guarantees the sharper (w(V) + w(class))/3.
    if (best.weight < (w.total() + heaviest_weight) / 3)
        throw InternalInvariantError("class-partition extraction fell below the averaging bound");
    return finish_certificate(g, w, OracleCase::ClassPartition, std::move(best), threshold);
}

std::pair<DemandFunction, SetColoring> extend_deg2(const PlaneGraph& g, int v,
                                                   const SetColoring& child_coloring) {
    if (v < 0 || v >= g.n || g.degree(v) != 2)
        throw MalformedInputError("extend_deg2 needs a vertex of degree exactly 2");
    Rational level = demand_threshold(g.n - 1);
    if (denominator(level * Rational(child_coloring.N)) != 1)
        throw WrongDenominatorError("child denominator does not accommodate the child demand");

    Reduced child = delete_vertex(g, v);
    if (child_coloring.size() != child.graph.n)
        throw MalformedInputError("child coloring size does not match g - v");
    auto check = verify_set_coloring(child.graph, DemandFunction::constant(child.graph.n, level),
                                     child_coloring);
    if (!check.valid || !check.tight)
        throw NotTightError("child coloring must be tight at the child demand: " + check.violation);

    const Integer& n_colors = child_coloring.N;
    DemandFunction f = DemandFunction::constant(g.n, level);
    f.values[v] = Rational(1) - 2 * level;

    SetColoring out;
    out.N = n_colors;
    out.sets.resize(g.n);
    for (int x = 0; x < g.n; ++x)
        if (x != v) out.sets[x] = child_coloring.sets[child.map[x]];

    ColorSet blocked;
    for (int u : g.adj[v]) blocked = blocked.unite(out.sets[u]);
    ColorSet free = blocked.complement_within(n_colors);
    Integer need = numerator(f.values[v] * Rational(n_colors));
    if (free.size() < need)
        throw InternalInvariantError("degree-2 extension ran out of colors (counting bug)");
    out.sets[v] = free.take_front(need);

    auto final_check = verify_set_coloring(g, f, out);
    if (!final_check.valid || !final_check.tight)
        throw InternalInvariantError("degree-2 extension failed verification: " + final_check.violation);
    return {std::move(f), std::move(out)};
}

SafeFaceExtension extend_safe_face(const PlaneGraph& g, const SafeFace& sf,
                                   const SetColoring& child_coloring) {
    if (!is_safe_face(g, sf)) throw NotSafeError("extension requires a safe face");
    Rational level = demand_threshold(g.n - 6);
    if (denominator(level * Rational(child_coloring.N)) != 1)
        throw WrongDenominatorError("child denominator does not accommodate the child demand");

    Reduced collapsed = collapse_safe_face(g, sf);
    if (child_coloring.size() != collapsed.graph.n)
        throw MalformedInputError("child coloring size does not match the collapsed graph");
    auto check = verify_set_coloring(collapsed.graph,
                                     DemandFunction::constant(collapsed.graph.n, level),
                                     child_coloring);
    if (!check.valid || !check.tight)
        throw NotTightError("child coloring must be tight at the child demand: " + check.violation);

    const Integer& n_colors = child_coloring.N;
    DemandFunction f = DemandFunction::constant(g.n, level);
    for (int i = 0; i < 4; ++i) f.values[sf.ring[i]] = Rational(1) - 2 * level;
    Integer need = numerator((Rational(1) - 2 * level) * Rational(n_colors));

    SetColoring out;
    out.N = n_colors;
    out.sets.resize(g.n);
    // Copy the child colors back; the two merged vertices fan out to both of
    // their preimages, which is exactly what makes the pools below work.
    for (int x = 0; x < g.n; ++x)
        if (collapsed.map[x] >= 0) out.sets[x] = child_coloring.sets[collapsed.map[x]];

    const int r1 = sf.ring[0], r2 = sf.ring[1], r3 = sf.ring[2], r4 = sf.ring[3], r5 = sf.ring[4];
    const int x1 = sf.outside[0], x2 = sf.outside[1], x3 = sf.outside[2], x4 = sf.outside[3];

    out.sets[r1] = out.sets[x1].unite(out.sets[r5]).complement_within(n_colors).take_front(need);
    out.sets[r2] = out.sets[x2].unite(out.sets[r1]).complement_within(n_colors).take_front(need);

    ColorSet pool3 = out.sets[r2].unite(out.sets[x3]).complement_within(n_colors);
    ColorSet pool4 = out.sets[r5].unite(out.sets[x4]).complement_within(n_colors);
    if (pool3.size() < need || pool4.size() < need)
        throw InternalInvariantError("safe-face pools are smaller than the counting argument allows");
    // With the x3/x4 colors equal and the r2/r5 colors disjoint, the union of
    // the pools has size exactly N*(1 - level) >= 2*need.
    Integer union_size = pool3.unite(pool4).size();
    if (union_size != numerator((Rational(1) - level) * Rational(n_colors)))
        throw InternalInvariantError("pool union size mismatch in safe-face extension");
    if (union_size < 2 * need)
        throw InternalInvariantError("pool union cannot host both ring vertices");

    ColorSet only3 = pool3.subtract(pool4);
    ColorSet chosen3 = only3.take_front(std::min(only3.size(), need));
    if (chosen3.size() < need)
        chosen3 = chosen3.unite(pool3.intersect(pool4).take_front(need - chosen3.size()));
    ColorSet chosen4 = pool4.subtract(chosen3).take_front(need);
    out.sets[r3] = chosen3;
    out.sets[r4] = chosen4;

    auto final_check = verify_set_coloring(g, f, out);
    if (!final_check.valid || !final_check.tight)
        throw InternalInvariantError("safe-face extension failed verification: " + final_check.violation);
    return SafeFaceExtension{std::move(f), std::move(out), std::move(pool3), std::move(pool4)};
}

SetColoring merge_cut_colorings(const PlaneGraph& parent, const SplitResult& split,
                                const SetColoring& first, const SetColoring& second) {
    if (first.size() != split.first.n || second.size() != split.second.n)
        throw MalformedInputError("piece colorings do not match the split");
    if (first.N != second.N)
        throw DemandMismatchError("piece colorings use different denominators");

    int shared = -1;
    for (int v = 0; v < parent.n; ++v)
        if (split.map_first[v] >= 0 && split.map_second[v] >= 0) {
            if (shared >= 0) throw MalformedInputError("split shares more than one vertex");
            shared = v;
        }
    if (shared < 0) throw MalformedInputError("split shares no vertex");

    const ColorSet& target = first.sets[split.map_first[shared]];
    const ColorSet& source = second.sets[split.map_second[shared]];
    if (target.size() != source.size())
        throw SizeMismatchError("shared vertex has different color counts in the two pieces");

    ColorSet source_rest = source.complement_within(first.N);
    ColorSet target_rest = target.complement_within(first.N);

    SetColoring merged;
    merged.N = first.N;
    merged.sets.resize(parent.n);
    for (int v = 0; v < parent.n; ++v) {
        if (split.map_first[v] >= 0) {
            merged.sets[v] = first.sets[split.map_first[v]];
        } else {
            const ColorSet& s = second.sets[split.map_second[v]];
            merged.sets[v] = map_through(s, source, target)
                                 .unite(map_through(s, source_rest, target_rest));
        }
    }
    return merged;
}

SetColoring recursive_coloring(const PlaneGraph& g, const Rational& x,
                               const Integer& denominator_multiple, const Budget& budget) {
    if (x < 0 || x > 1) throw MalformedInputError("demand level must lie in [0,1]");

    static std::map<std::string, SetColoring> memo;
    static std::mutex memo_mutex;
    std::string key = graph_key(g) + "@" + to_string(x);

    SetColoring base;
    bool hit = false;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) {
            base = it->second;
            hit = true;
        }
    }
    if (!hit) {
        auto feasibility = has_f_coloring(g, DemandFunction::constant(g.n, x), budget);
        if (!feasibility.feasible) {
            if (x <= demand_threshold(g.n))
                throw InternalInvariantError(
                    "demand at or below the certified threshold reported infeasible");
            throw InfeasibleInputError("demand level " + to_string(x) + " is infeasible");
        }
        base = to_set_coloring(g, DemandFunction::constant(g.n, x), feasibility.distribution);
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo.emplace(key, base);
    }

    Integer target = int_lcm(base.N, denominator_multiple);
    return base.rescaled(target / base.N);
}

OracleCertificate proof_oracle(const PlaneGraph& g, const WeightFunction& w,
                               const Budget& budget) {
    require_triangle_free(g, "proof_oracle");
    if (!is_connected(g)) throw MalformedInputError("proof_oracle requires a connected graph");
    if (w.size() != g.n) throw MalformedInputError("weight size does not match the graph");
    w.validate();

    const int n = g.n;
    const Rational total = w.total();
    const Rational threshold = demand_threshold(n) * total;
    constexpr int kBaseSize = 9;

    // (a) Small graphs: one exact LP.
    if (n <= kBaseSize) {
        Rational level = demand_threshold(n);
        SetColoring coloring = recursive_coloring(g, level, 1, budget);
        auto cert = finish_certificate(g, w, OracleCase::BaseLP,
                                       best_color_class(g, coloring, w), threshold);
        cert.children.push_back({"whole graph", n, level, coloring.N});
        return cert;
    }

    // (b) Cut vertex: color both sides at this graph's demand and merge.
    auto cuts = cut_vertices(g);
    if (!cuts.empty()) {
        int v = cuts.front();
        SplitResult split = split_at_cut_vertex(g, v);
        Rational level = demand_threshold(n);
        SetColoring c1 = recursive_coloring(split.first, level, 1, budget);
        SetColoring c2 = recursive_coloring(split.second, level, 1, budget);
        Integer common = int_lcm(c1.N, c2.N);
        c1 = c1.rescaled(common / c1.N);
        c2 = c2.rescaled(common / c2.N);
        SetColoring merged = merge_cut_colorings(g, split, c1, c2);
        auto cert = finish_certificate(g, w, OracleCase::CutSplit,
                                       best_color_class(g, merged, w), threshold);
        cert.vertex = v;
        cert.children.push_back({"cut piece", split.first.n, level, c1.N});
        cert.children.push_back({"cut piece", split.second.n, level, c2.N});
        return cert;
    }

    // (c) A face of length other than 5 folds; faces matching the odd girth
    // are exempt (the folding lemma does not cover them).
    auto girth = odd_girth(g);
    for (const auto& walk : faces(g)) {
        if (walk.length() == 5) continue;
        if (girth && walk.length() == *girth) continue;
        FoldResult fold = fold_face(g, walk);
        Rational level = demand_threshold(n - 1);
        SetColoring child = recursive_coloring(fold.child.graph, level, 1, budget);
        SetColoring lifted;
        lifted.N = child.N;
        lifted.sets.resize(n);
        for (int x = 0; x < n; ++x) lifted.sets[x] = child.sets[fold.child.map[x]];
        auto cert = finish_certificate(g, w, OracleCase::Fold,
                                       best_color_class(g, lifted, w), threshold);
        cert.face = walk;
        cert.children.push_back({"folded child", fold.child.graph.n, level, child.N});
        return cert;
    }

    // (d) A heavy vertex of degree at most 3: boost its demand to 2/3 via a
    // monochromatic neighborhood.  Heavy means w(v) >= w(V)/(3n); ties count
    // as heavy, which is sound because the averaging bound needs no slack.
    int heavy = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 3) continue;
        if (w(v) * Rational(3 * n) >= total && (heavy < 0 || w(v) > w(heavy))) heavy = v;
    }
    if (heavy >= 0) {
        auto coloring = mono_neighborhood_coloring(g, {heavy}, budget);
        auto lifted = lift_mono_coloring(g, {heavy}, coloring);
        auto best = best_color_class(g, lifted.coloring, w);
        if (best.weight < (total + w(heavy)) / 3)
            throw InternalInvariantError("heavy-vertex extraction fell below the averaging bound");
        auto cert = finish_certificate(g, w, OracleCase::HeavyVertex, std::move(best), threshold);
        cert.vertex = heavy;
        return cert;
    }

    // (e) A (necessarily light) degree-2 vertex: delete and extend.
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2) continue;
        Rational level = demand_threshold(n - 1);
        Reduced child = delete_vertex(g, v);
        SetColoring child_coloring = recursive_coloring(child.graph, level, 1, budget);
        auto [f, coloring] = extend_deg2(g, v, child_coloring);
        auto best = best_color_class(g, coloring, w);
        if (best.weight < w.demand_weight(f))
            throw InternalInvariantError("class extraction fell below the demand weight");
        auto cert = finish_certificate(g, w, OracleCase::Deg2Extend, std::move(best), threshold);
        cert.vertex = v;
        cert.children.push_back({"vertex-deleted child", child.graph.n, level, child_coloring.N});
        return cert;
    }

    // (f) Now 2-connected, minimum degree 3, all faces pentagonal: a safe
    // face exists, and its ring is light because step (d) declined.
    auto safe = find_safe_faces(g);
    if (safe.empty())
        throw InternalInvariantError(
            "no safe face on a min-degree-3 all-pentagons triangle-free plane graph");
    const SafeFace& sf = safe.front();
    Rational level = demand_threshold(n - 6);
    Reduced collapsed = collapse_safe_face(g, sf);
    SetColoring child_coloring = recursive_coloring(collapsed.graph, level, 1, budget);
    SafeFaceExtension ext = extend_safe_face(g, sf, child_coloring);
    auto best = best_color_class(g, ext.coloring, w);
    if (best.weight < w.demand_weight(ext.demand))
        throw InternalInvariantError("class extraction fell below the demand weight");
    auto cert = finish_certificate(g, w, OracleCase::SafeFaceExtend, std::move(best), threshold);
    cert.safe_face = sf;
    cert.pool3_size = ext.pool3.size();
    cert.pool4_size = ext.pool4.size();
    cert.children.push_back({"collapsed child", collapsed.graph.n, level, child_coloring.N});
    return cert;
}

ReductionReport verify_no_minimal_counterexample(const PlaneGraph& g) {
    require_triangle_free(g, "verify_no_minimal_counterexample");

    ReductionReport report;
    report.not_two_connected = g.n < 3 || !is_connected(g) || !cut_vertices(g).empty();
    for (const auto& walk : faces(g))
        if (walk.length() != 5) report.has_non_pentagonal_face = true;
    report.has_degree_le_two = g.min_degree() <= 2;
    report.has_safe_face = !find_safe_faces(g).empty();

    if (report.not_two_connected)
        report.applied = ReductionReport::Rule::NotTwoConnected;
    else if (report.has_non_pentagonal_face)
        report.applied = ReductionReport::Rule::NonPentagonalFace;
    else if (report.has_degree_le_two)
        report.applied = ReductionReport::Rule::DegreeAtMostTwo;
    else if (report.has_safe_face)
        report.applied = ReductionReport::Rule::SafeFacePresent;
    else
        throw InternalInvariantError("no structural reduction applies (contradicts the theory)");
    return report;
}

}  // namespace fraccol
