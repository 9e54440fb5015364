#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fraccol/coloring.hpp"
#include "fraccol/frac_lp.hpp"
#include "fraccol/graph.hpp"
#include "fraccol/reductions.hpp"

namespace fraccol {

/// How one step of the independent-set oracle discharged its guarantee.
enum class OracleCase { HeavyVertex, CutSplit, Fold, Deg2Extend, SafeFaceExtend, BaseLP, ClassPartition };

std::string to_string(OracleCase c);

/// Record of one child coloring consumed by an oracle step.
struct ChildColoring {
    std::string role;  // e.g. "cut piece", "folded child"
    int n = 0;
    Rational demand;
    Integer denominator;
};

/// Certificate produced by the oracles: an independent set whose weight
/// provably reaches the guarantee threshold, plus the case analysis taken.
struct OracleCertificate {
    OracleCase taken;
    std::vector<int> independent_set;
    Rational set_weight;
    Rational threshold;  // the guaranteed lower bound on set_weight
    std::vector<ChildColoring> children;
    // Case-specific data: the chosen vertex / face / safe face, and for
    // SafeFaceExtend the sizes of the two freedom pools of the extension.
    int vertex = -1;
    std::optional<FacialWalk> face;
    std::optional<SafeFace> safe_face;
    Integer pool3_size, pool4_size;
};

/// Picks the heaviest vertex (degree <= 4 required of the whole graph),
/// forces its neighborhood monochromatic, and extracts a color class of
/// weight >= (w(V) + w(v)) / 3 >= ((n+1)/(3n)) w(V).
OracleCertificate heavy_vertex_oracle(const PlaneGraph& g, const WeightFunction& w,
                                      const Budget& budget = {});

/// Locality-based oracle for degree <= 4 graphs without separating 4-cycles:
/// greedily colors the distance-(D-1) power with < 4^D classes, constrains
/// the heaviest class's neighborhoods monochromatic, and extracts a class of
/// weight >= (1/3 + 1/(3*4^D)) w(V).  The required coloring is only
/// guaranteed to exist for sufficiently large D; when the search fails the
/// call throws MonoColoringFailedError (data, not a suite failure).
OracleCertificate class_partition_oracle(const PlaneGraph& g, const WeightFunction& w,
                                         int distance_radius, const Budget& budget = {});

/// Extends a tight coloring of g - v (demand = demand_threshold(n-1)) across
/// a degree-2 vertex v, giving v the demand 1 - 2*demand_threshold(n-1).
/// The counting argument guarantees enough free colors.
/// Errors: NotTightError, WrongDenominatorError.
std::pair<DemandFunction, SetColoring> extend_deg2(const PlaneGraph& g, int v,
                                                   const SetColoring& child_coloring);

/// Extension across a collapsed safe face: copies the merged vertices'
/// colors back, then chooses colors for the four removed ring vertices from
/// explicitly constructed freedom pools.  The child coloring must be tight at
/// demand_threshold(n-6).
/// Errors: NotTightError, WrongDenominatorError, InternalInvariantError.
struct SafeFaceExtension {
    DemandFunction demand;
    SetColoring coloring;
    ColorSet pool3, pool4;  // the freedom pools for ring[2] and ring[3]
};

SafeFaceExtension extend_safe_face(const PlaneGraph& g, const SafeFace& sf,
                                   const SetColoring& child_coloring);

/// Merges colorings of the two sides of a cut vertex: permutes the second
/// coloring's colors so the shared vertex agrees, then takes the union.
/// Both colorings must use the same denominator and give the shared vertex
/// equally many colors.
/// Errors: SizeMismatchError, DemandMismatchError.
SetColoring merge_cut_colorings(const PlaneGraph& parent, const SplitResult& split,
                                const SetColoring& first, const SetColoring& second);

/// A tight uniform-demand set coloring at level x <= demand_threshold(n),
/// realized by the exact covering LP; the denominator is normalized to a
/// multiple of `denominator_multiple`.  Results are memoized per (graph, x).
/// Throws InternalInvariantError if the LP reports infeasibility (the bound
/// theory rules that out for triangle-free planar inputs).
SetColoring recursive_coloring(const PlaneGraph& g, const Rational& x,
                               const Integer& denominator_multiple = 1,
                               const Budget& budget = {});

/// The guarantee engine: returns an independent set of weight at least
/// demand_threshold(n) * w(V), by the structural case analysis
///   (a) small n: direct LP;      (b) cut vertex: split, color, merge;
///   (c) non-pentagonal face: fold and lift;
///   (d) heavy vertex of degree <= 3: monochromatic-neighborhood route;
///   (e) light degree-2 vertex: delete and extend;
///   (f) otherwise a safe face exists: collapse and extend.
OracleCertificate proof_oracle(const PlaneGraph& g, const WeightFunction& w,
                               const Budget& budget = {});

/// Which structural reduction applies to g.  At least one always does; a
/// graph escaping all four would contradict the underlying theory, so that
/// outcome raises InternalInvariantError.
struct ReductionReport {
    enum class Rule { NotTwoConnected, NonPentagonalFace, DegreeAtMostTwo, SafeFacePresent };
    Rule applied;
    bool not_two_connected = false;
    bool has_non_pentagonal_face = false;
    bool has_degree_le_two = false;
    bool has_safe_face = false;
};

std::string to_string(ReductionReport::Rule r);

ReductionReport verify_no_minimal_counterexample(const PlaneGraph& g);

}  // namespace fraccol
