#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace fraccol {

// Exact arithmetic everywhere: all optimality decisions, demand thresholds and
// certificate inequalities are compared as rationals, never as doubles.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Integer int_gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

inline Integer int_lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return a / int_gcd(a, b) * b;
}

/// Formats as "p/q" ("p" when q == 1); the wire format used in all reports.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer p(text.substr(0, slash));
        Integer q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p) / Rational(q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

/// Least common multiple of the denominators of a list of rationals (1 for an
/// empty list); the smallest N making every N*r integral.
inline Integer common_denominator(const std::vector<Rational>& values) {
    Integer n = 1;
    for (const auto& v : values) n = int_lcm(n, denominator(v));
    return n;
}

}  // namespace fraccol
