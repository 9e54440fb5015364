#pragma once

#include <string>
#include <vector>

#include "fraccol/graph.hpp"
#include "fraccol/rational.hpp"

namespace fraccol {

/// Resource limits for the exact searches.  Exceeding one raises
/// BudgetExceededError; there is never a silent wrong answer.
struct Budget {
    long long coloring_nodes = 10'000'000;  // backtracking nodes per 3-coloring search
    long long bb_nodes = 1'000'000;         // branch-and-bound nodes per independent-set solve
    long long simplex_pivots = 10'000;      // pivots per LP solve
};

/// A set of colors, i.e. a subset of {1..N}, kept as sorted disjoint integer
/// intervals.  The toolkit's colorings are unions of few blocks even when the
/// common denominator N is astronomically large, so intervals keep every
/// operation exact and cheap.  Intervals are half-open [lo, hi).
class ColorSet {
public:
    using Run = std::pair<Integer, Integer>;

    ColorSet() = default;
    static ColorSet range(const Integer& lo, const Integer& hi);  // [lo, hi)
    static ColorSet of(const std::vector<long long>& values);

    const std::vector<Run>& runs() const { return runs_; }
    Integer size() const;
    bool empty() const { return runs_.empty(); }
    bool contains(const Integer& c) const;
    bool intersects(const ColorSet& other) const;

    ColorSet unite(const ColorSet& other) const;
    ColorSet subtract(const ColorSet& other) const;
    ColorSet intersect(const ColorSet& other) const;
    /// The k smallest elements (k must not exceed size()).
    ColorSet take_front(const Integer& k) const;
    /// {1..n} minus this set.
    ColorSet complement_within(const Integer& n) const;

    /// Explicit element list; throws if more than `limit` elements.
    std::vector<long long> values(long long limit = 1'000'000) const;

    bool operator==(const ColorSet& other) const { return runs_ == other.runs_; }

private:
    std::vector<Run> runs_;  // sorted, disjoint, non-touching, all non-empty
    void normalize();
};

/// Order-preserving transport: maps s ∩ from through the unique
/// order-isomorphism from -> to (both must have equal size).
ColorSet map_through(const ColorSet& s, const ColorSet& from, const ColorSet& to);

/// Per-vertex rational demand in [0,1].
struct DemandFunction {
    std::vector<Rational> values;

    static DemandFunction constant(int n, const Rational& x);
    const Rational& operator()(int v) const { return values[v]; }
    int size() const { return static_cast<int>(values.size()); }
    /// Smallest N with N*f(v) integral for all v.
    Integer denominator_lcm() const { return common_denominator(values); }
};

/// Per-vertex strictly positive rational weights.
struct WeightFunction {
    std::vector<Rational> values;

    static WeightFunction uniform(int n, const Rational& x = Rational(1));
    const Rational& operator()(int v) const { return values[v]; }
    int size() const { return static_cast<int>(values.size()); }
    Rational total() const;
    Rational sum_over(const std::vector<int>& vertices) const;
    /// sum_v f(v) * w(v).
    Rational demand_weight(const DemandFunction& f) const;
    void validate() const;  // throws MalformedInputError unless all values > 0
};

/// Subsets of {1..N} per vertex, disjoint across edges.  Valid for a demand f
/// when |set(v)| >= N*f(v) everywhere; tight when equality holds everywhere.
struct SetColoring {
    Integer N = 1;
    std::vector<ColorSet> sets;

    int size() const { return static_cast<int>(sets.size()); }
    /// Rescales colors to a denominator k*N: color c becomes the block
    /// {k(c-1)+1, ..., kc}.  Validity and tightness are preserved.
    SetColoring rescaled(const Integer& factor) const;
};

struct ColoringCheck {
    bool valid = false;
    bool tight = false;
    std::string violation;  // human-readable description of the first failure
};

/// Checks edge disjointness and the per-vertex size constraint; reports the
/// first violation found.  Throws NotCommonDenominatorError when N*f(v) is
/// not integral for some v.
ColoringCheck verify_set_coloring(const PlaneGraph& g, const DemandFunction& f,
                                  const SetColoring& c);

/// Shrinks every set to exactly N*f(v) colors (keeping the smallest ones).
/// The coloring must be valid for f.
SetColoring trim_to_tight(const PlaneGraph& g, const DemandFunction& f, const SetColoring& c);

/// Proper coloring with colors 1..3.
struct ProperColoring {
    std::vector<int> colors;

    int operator()(int v) const { return colors[v]; }
    bool is_proper(const PlaneGraph& g) const;
};

/// Exact backtracking 3-coloring (most-constrained-vertex-first).  Guaranteed
/// to succeed on triangle-free planar inputs; NoColoringError on other inputs
/// that admit none, BudgetExceededError past the node limit.
ProperColoring three_coloring(const PlaneGraph& g, const Budget& budget = {});

enum class MonoMode {
    PerVertex,  // each x in X gets one common color over its own neighborhood
    Global,     // one single color over the union of all neighborhoods
};

/// Proper 3-coloring in which, for each x in X, all neighbors of x share one
/// color (per MonoMode).  Implemented by contracting each constrained
/// neighborhood to a single search vertex.  NoColoringError when the
/// constraints are unsatisfiable.
ProperColoring mono_neighborhood_coloring(const PlaneGraph& g, const std::vector<int>& X,
                                          const Budget& budget = {},
                                          MonoMode mode = MonoMode::PerVertex);

struct LiftedColoring {
    DemandFunction demand;  // 2/3 on X, 1/3 elsewhere
    SetColoring coloring;   // N = 3
};

/// Turns a neighborhood-monochromatic coloring into a set coloring meeting
/// the boosted demand: vertices keep their singleton color; each x in X gets
/// the two colors its neighborhood leaves free.  X must be independent with
/// pairwise disjoint neighborhoods.  Throws NotMonochromaticError when c
/// lacks the required structure.
LiftedColoring lift_mono_coloring(const PlaneGraph& g, const std::vector<int>& X,
                                  const ProperColoring& c);

struct BestClass {
    std::vector<int> vertices;  // the chosen color class (an independent set)
    Rational weight;
    Integer color;  // smallest color index achieving the maximum weight
};

/// Maximum-weight color class of a set coloring.  Classes are independent by
/// edge disjointness; when the coloring is valid for f, the best class weighs
/// at least sum_v f(v) w(v) (averaging over the N classes).
BestClass best_color_class(const PlaneGraph& g, const SetColoring& c, const WeightFunction& w);

}  // namespace fraccol
