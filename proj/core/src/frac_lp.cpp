#include "fraccol/frac_lp.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "fraccol/errors.hpp"
#include "fraccol/simplex.hpp"

namespace fraccol {

namespace {

using Bitset = boost::dynamic_bitset<>;

struct MwisSolver {
    int n;
    std::vector<Bitset> nbr;
    std::vector<Rational> w;
    std::vector<int> by_weight;  // vertex ids, weight descending, id ascending
    Bitset best_set;
    Rational best_value = 0;
    long long nodes = 0, node_limit;

    MwisSolver(const AbstractGraph& g, const std::vector<Rational>& weights, long long limit)
        : n(g.n), nbr(g.n, Bitset(g.n)), w(weights), node_limit(limit) {
        for (int v = 0; v < n; ++v)
            for (int u : g.adj[v]) nbr[v].set(u);
        by_weight.resize(n);
        std::iota(by_weight.begin(), by_weight.end(), 0);
        std::stable_sort(by_weight.begin(), by_weight.end(),
                         [&](int a, int b) { return w[a] > w[b]; });
        best_set = Bitset(n);
    }

    // Greedy weighted clique cover of the candidates: an upper bound, since an
    // independent set meets each clique at most once.
    Rational cover_bound(const Bitset& cand) const {
        Rational bound = 0;
        Bitset left = cand;
        for (int v : by_weight) {
            if (!left.test(v)) continue;
            bound += w[v];  // heaviest member of its clique
            Bitset clique(n);
            clique.set(v);
            left.reset(v);
            Bitset joint = left & nbr[v];
            for (int u = static_cast<int>(joint.find_first()); u != -1;
                 u = static_cast<int>(joint.find_next(u))) {
                if (!left.test(u)) continue;
                bool adjacent_to_all = true;
                for (int c = static_cast<int>(clique.find_first()); c != -1;
                     c = static_cast<int>(clique.find_next(c)))
                    if (!nbr[u].test(c)) {
                        adjacent_to_all = false;
                        break;
                    }
                if (adjacent_to_all) {
                    clique.set(u);
                    left.reset(u);
                }
            }
        }
        return bound;
    }

    void run(Bitset cand, Bitset current, const Rational& current_weight) {
        if (++nodes > node_limit)
            throw BudgetExceededError("independent-set search exceeded its node budget");
        if (cand.none()) {
            if (current_weight > best_value) {
                best_value = current_weight;
                best_set = current;
            }
            return;
        }
        if (current_weight + cover_bound(cand) <= best_value) return;

        // Branch on the candidate of maximum degree within the candidates.
        int pick = -1;
        size_t pick_degree = 0;
        for (int v = static_cast<int>(cand.find_first()); v != -1;
             v = static_cast<int>(cand.find_next(v))) {
            size_t d = (cand & nbr[v]).count();
            if (pick < 0 || d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        if (pick_degree == 0) {  // candidates are pairwise non-adjacent: take all
            Rational total = current_weight;
            for (int v = static_cast<int>(cand.find_first()); v != -1;
                 v = static_cast<int>(cand.find_next(v)))
                total += w[v];
            if (total > best_value) {
                best_value = total;
                best_set = current | cand;
            }
            return;
        }

        Bitset with = cand;
        with &= ~nbr[pick];
        with.reset(pick);
        Bitset current_with = current;
        current_with.set(pick);
        run(with, current_with, current_weight + w[pick]);

        Bitset without = cand;
        without.reset(pick);
        run(without, current, current_weight);
    }
};

}  // namespace

MwisResult max_weight_independent_set(const AbstractGraph& g, const std::vector<Rational>& w,
                                      const Budget& budget) {
    if (static_cast<int>(w.size()) != g.n)
        throw MalformedInputError("weight vector size does not match the graph");
    for (const auto& v : w)
        if (v < 0) throw MalformedInputError("independent-set weights must be non-negative");

    MwisSolver solver(g, w, budget.bb_nodes);
    Bitset cand(g.n);
    for (int v = 0; v < g.n; ++v)
        if (w[v] > 0) cand.set(v);  // zero-weight vertices never help
    solver.run(cand, Bitset(g.n), Rational(0));

    MwisResult out;
    out.weight = solver.best_value;
    for (int v = 0; v < g.n; ++v)
        if (solver.best_set.test(v)) out.vertices.push_back(v);
    return out;
}

MwisResult max_weight_independent_set(const PlaneGraph& g, const WeightFunction& w,
                                      const Budget& budget) {
    w.validate();
    return max_weight_independent_set(g.abstract(), w.values, budget);
}

std::vector<std::vector<int>> maximal_independent_sets(const AbstractGraph& g) {
    // Bron-Kerbosch with pivoting on the complement (cliques there are
    // independent sets here).
    std::vector<Bitset> non_nbr(g.n, Bitset(g.n));
    for (int v = 0; v < g.n; ++v) {
        non_nbr[v].set();
        non_nbr[v].reset(v);
        for (int u : g.adj[v]) non_nbr[v].reset(u);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> current;

    std::function<void(Bitset, Bitset)> expand = [&](Bitset p, Bitset x) {
        if (p.none() && x.none()) {
            out.push_back(current);
            return;
        }
        Bitset px = p | x;
        int pivot = static_cast<int>(px.find_first());
        size_t best = 0;
        for (int v = static_cast<int>(px.find_first()); v != -1;
             v = static_cast<int>(px.find_next(v))) {
            size_t cnt = (p & non_nbr[v]).count();
            if (cnt > best) {
                best = cnt;
                pivot = v;
            }
        }
        Bitset candidates = p & ~non_nbr[pivot];
        for (int v = static_cast<int>(candidates.find_first()); v != -1;
             v = static_cast<int>(candidates.find_next(v))) {
            current.push_back(v);
            expand(p & non_nbr[v], x & non_nbr[v]);
            current.pop_back();
            p.reset(v);
            x.set(v);
        }
    };

    Bitset all(g.n);
    all.set();
    expand(all, Bitset(g.n));
    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::vector<int>> seed_pool(const PlaneGraph& g) {
    if (g.n <= 16) return maximal_independent_sets(g.abstract());
    // Greedy maximal sets, one grown from each vertex; covers every vertex.
    std::set<std::vector<int>> pool;
    for (int start = 0; start < g.n; ++start) {
        std::vector<int> s{start};
        for (int v = 0; v < g.n; ++v) {
            if (v == start) continue;
            bool ok = true;
            for (int u : s)
                if (g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) s.push_back(v);
        }
        std::sort(s.begin(), s.end());
        pool.insert(s);
    }
    return {pool.begin(), pool.end()};
}

constexpr int kMaxPricingRounds = 100000;

}  // namespace

CoverCertificate fractional_cover(const PlaneGraph& g, const DemandFunction& f,
                                  const Budget& budget) {
    if (g.n < 1) throw MalformedInputError("covering LP needs at least one vertex");
    if (f.size() != g.n) throw MalformedInputError("demand size does not match the graph");
    for (const auto& x : f.values)
        if (x < 0 || x > 1) throw MalformedInputError("demands must lie in [0,1]");

    std::vector<std::vector<int>> pool = seed_pool(g);
    std::set<std::vector<int>> pool_index(pool.begin(), pool.end());

    LpSolution sol;
    for (int round = 0;; ++round) {
        if (round > kMaxPricingRounds)
            throw BudgetExceededError("column generation failed to converge");

        LpProblem master;
        master.a.assign(g.n, std::vector<Rational>(pool.size(), Rational(0)));
        for (size_t j = 0; j < pool.size(); ++j)
            for (int v : pool[j]) master.a[v][j] = 1;
        master.rel.assign(g.n, '>');
        master.b = f.values;
        master.c.assign(pool.size(), Rational(1));
        sol = solve_lp(master, budget.simplex_pivots);
        if (sol.status != LpStatus::Optimal)
            throw InternalInvariantError("covering master must be feasible and bounded");

        // Price: any independent set with dual weight above 1 improves.
        auto priced = max_weight_independent_set(g.abstract(), sol.dual, budget);
        if (priced.weight <= 1) break;
        if (!pool_index.insert(priced.vertices).second)
            throw InternalInvariantError("pricing returned a set already in the pool");
        pool.push_back(priced.vertices);
    }

    CoverCertificate out;
    out.value = sol.objective;
    out.dual = sol.dual;
    for (size_t j = 0; j < pool.size(); ++j)
        if (sol.x[j] > 0) out.primal.emplace_back(pool[j], sol.x[j]);

    // Strong duality in exact arithmetic; also the dual must be non-negative.
    Rational dual_value = 0;
    for (int v = 0; v < g.n; ++v) {
        if (out.dual[v] < 0) throw InternalInvariantError("covering dual must be non-negative");
        dual_value += out.dual[v] * f.values[v];
    }
    if (dual_value != out.value)
        throw InternalInvariantError("primal/dual objective mismatch in exact LP");
    return out;
}

FractionalResult chi_f(const PlaneGraph& g, const Budget& budget) {
    auto cover = fractional_cover(g, DemandFunction::constant(g.n, Rational(1)), budget);
    return FractionalResult{cover.value, std::move(cover.primal), std::move(cover.dual)};
}

FeasibilityResult has_f_coloring(const PlaneGraph& g, const DemandFunction& f,
                                 const Budget& budget) {
    auto cover = fractional_cover(g, f, budget);
    FeasibilityResult out;
    if (cover.value <= 1) {
        out.feasible = true;
        out.distribution = std::move(cover.primal);
    } else {
        // The optimal dual y is a Farkas certificate: sum f(v) y(v) = value > 1
        // while y(S) <= 1 for every independent set S (certified by pricing).
        out.feasible = false;
        out.witness = std::move(cover.dual);
    }
    return out;
}

SetColoring to_set_coloring(const PlaneGraph& g, const DemandFunction& f,
                            const SetDistribution& distribution) {
    if (f.size() != g.n) throw MalformedInputError("demand size does not match the graph");
    Rational total = 0;
    for (const auto& [set, lambda] : distribution) {
        if (lambda < 0) throw InfeasibleInputError("distribution weights must be non-negative");
        for (int v : set)
            if (v < 0 || v >= g.n) throw MalformedInputError("distribution set has a bad vertex");
        total += lambda;
    }
    if (total > 1) throw InfeasibleInputError("distribution weights exceed the unit budget");
    for (int v = 0; v < g.n; ++v) {
        Rational depth = 0;
        for (const auto& [set, lambda] : distribution)
            if (std::find(set.begin(), set.end(), v) != set.end()) depth += lambda;
        if (depth < f(v))
            throw InfeasibleInputError("vertex " + std::to_string(v) + " is covered below its demand");
    }

    Integer n_common = f.denominator_lcm();
    for (const auto& [set, lambda] : distribution) n_common = int_lcm(n_common, denominator(lambda));

    SetColoring out;
    out.N = n_common;
    out.sets.assign(g.n, ColorSet());
    Integer cursor = 1;
    for (const auto& [set, lambda] : distribution) {
        Integer width = numerator(lambda * Rational(n_common));
        ColorSet block = ColorSet::range(cursor, cursor + width);
        cursor += width;
        for (int v : set) out.sets[v] = out.sets[v].unite(block);
    }
    for (int v = 0; v < g.n; ++v)
        out.sets[v] = out.sets[v].take_front(numerator(f(v) * Rational(n_common)));

    auto check = verify_set_coloring(g, f, out);
    if (!check.valid)
        throw InfeasibleInputError("distribution does not induce a coloring: " + check.violation);
    return out;
}

std::optional<WeightFunction> find_witness(const PlaneGraph& g, const Rational& x,
                                           const Budget& budget) {
    auto result = has_f_coloring(g, DemandFunction::constant(g.n, x), budget);
    if (result.feasible) return std::nullopt;

    // Clear denominators and divide by the common gcd for readability.
    Integer scale = common_denominator(result.witness);
    Integer content = 0;
    for (auto& w : result.witness) {
        w *= Rational(scale);
        content = int_gcd(content, numerator(w));
    }
    if (content > 1)
        for (auto& w : result.witness) w /= Rational(content);
    return WeightFunction{std::move(result.witness)};
}

}  // namespace fraccol
