#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fraccol/coloring.hpp"
#include "fraccol/graph.hpp"
#include "fraccol/rational.hpp"

namespace fraccol {

struct MwisResult {
    std::vector<int> vertices;
    Rational weight;
};

/// Exact maximum-weight independent set by branch and bound: branch on the
/// highest-degree candidate, prune with a greedy weighted clique cover.
/// Weights must be non-negative; zero-weight vertices may be left out of the
/// returned set.
MwisResult max_weight_independent_set(const AbstractGraph& g, const std::vector<Rational>& w,
                                      const Budget& budget = {});
MwisResult max_weight_independent_set(const PlaneGraph& g, const WeightFunction& w,
                                      const Budget& budget = {});

/// A weighted family of independent sets (the support of an LP solution).
using SetDistribution = std::vector<std::pair<std::vector<int>, Rational>>;

/// Exact optimum of the covering program
///     min sum_S lambda_S   s.t.   sum_{S contains v} lambda_S >= f(v),  lambda >= 0
/// over all independent sets S, solved by column generation: a restricted
/// master over a growing pool, priced by max_weight_independent_set on the
/// dual weights, until no independent set S has dual weight y(S) > 1.
struct CoverCertificate {
    Rational value;
    SetDistribution primal;     // sets with positive lambda; weights sum to value
    std::vector<Rational> dual; // y >= 0 with sum_v f(v) y(v) = value and max_S y(S) <= 1
};

CoverCertificate fractional_cover(const PlaneGraph& g, const DemandFunction& f,
                                  const Budget& budget = {});

/// Exact fractional chromatic number with primal and dual certificates.
struct FractionalResult {
    Rational value;
    SetDistribution primal;
    std::vector<Rational> dual;
};

FractionalResult chi_f(const PlaneGraph& g, const Budget& budget = {});

/// Decides whether g admits a fractional coloring meeting demand f.  Feasible
/// instances come with a distribution (sum of weights <= 1 covering every
/// vertex to depth f(v)); infeasible ones with Farkas weights w >= 0 whose
/// demanded weight sum_v f(v) w(v) strictly exceeds max_S w(S).
struct FeasibilityResult {
    bool feasible = false;
    SetDistribution distribution;
    std::vector<Rational> witness;
};

FeasibilityResult has_f_coloring(const PlaneGraph& g, const DemandFunction& f,
                                 const Budget& budget = {});

/// Converts a feasible distribution into a tight set coloring: N is the least
/// common denominator of f and the weights, each set receives a block of
/// N*lambda_S consecutive colors, each vertex the union of its sets' blocks
/// trimmed to N*f(v).  Throws InfeasibleInputError when the distribution does
/// not meet f.
SetColoring to_set_coloring(const PlaneGraph& g, const DemandFunction& f,
                            const SetDistribution& distribution);

/// Looks for witness weights against the uniform demand x: weights under
/// which no independent set reaches x * (total weight).  Returns the Farkas
/// certificate scaled to coprime integers, or nullopt when the demand is
/// feasible.  Witness entries are non-negative but may include zeros.
std::optional<WeightFunction> find_witness(const PlaneGraph& g, const Rational& x,
                                           const Budget& budget = {});

/// All maximal independent sets (used to seed the column pool at small n).
std::vector<std::vector<int>> maximal_independent_sets(const AbstractGraph& g);

}  // namespace fraccol
