#pragma once

#include "fraccol/errors.hpp"
#include "fraccol/rational.hpp"

namespace fraccol {

/// Surplus coefficient of the demand threshold; the constructions below give
/// exact slack because kMargin - 9*kMargin^2 = 0 at this value.
inline const Rational kMargin = Rational(1, 9);

/// The uniform demand certified for every n-vertex instance:
/// 1/3 + kMargin/n, strictly decreasing in n.
inline Rational demand_threshold(long long n) {
    if (n < 1) throw ParamOutOfRangeError("demand_threshold needs n >= 1");
    return Rational(1, 3) + kMargin / Rational(n);
}

/// Upper bound on the fractional chromatic number of an n-vertex instance:
/// 3 - 1/(n + 1/3), identically the reciprocal of demand_threshold(n).
inline Rational chi_f_bound(long long n) {
    if (n < 1) throw ParamOutOfRangeError("chi_f_bound needs n >= 1");
    return Rational(3) - Rational(1) / (Rational(n) + Rational(1, 3));
}

/// Upper bound for maximum degree at most four: 3n/(n+1).
inline Rational chi_f_bound_deg4(long long n) {
    if (n < 1) throw ParamOutOfRangeError("chi_f_bound_deg4 needs n >= 1");
    return Rational(3 * n) / Rational(n + 1);
}

/// Demand surplus certified for degree <= 4 instances without separating
/// 4-cycles at locality radius D: 1/(3*4^D).
inline Rational margin0_deg4_nosep(int distance_radius) {
    if (distance_radius < 4) throw ParamOutOfRangeError("locality radius must be >= 4");
    Integer pow4 = 1;
    for (int i = 0; i < distance_radius; ++i) pow4 *= 4;
    return Rational(1) / (Rational(3) * Rational(pow4));
}

/// Gap below 3 in the corresponding chromatic bound: 3/(4^D + 1), which
/// equals 9 d0 / (3 d0 + 1) for d0 = margin0_deg4_nosep(D).
inline Rational margin_deg4_nosep(int distance_radius) {
    if (distance_radius < 4) throw ParamOutOfRangeError("locality radius must be >= 4");
    Integer pow4 = 1;
    for (int i = 0; i < distance_radius; ++i) pow4 *= 4;
    return Rational(3) / (Rational(pow4) + 1);
}

}  // namespace fraccol
