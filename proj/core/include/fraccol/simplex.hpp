#pragma once

#include <vector>

#include "fraccol/rational.hpp"

namespace fraccol {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// min c.x  subject to  a_i . x (rel_i) b_i  and  x >= 0,
/// with rel_i one of '<', '>', '=' (weak inequalities).
struct LpProblem {
    std::vector<std::vector<Rational>> a;
    std::vector<char> rel;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    std::vector<Rational> x;     // primal values (structural variables)
    std::vector<Rational> dual;  // one multiplier per input row
};

/// Two-phase dense tableau simplex over exact rationals.  Bland's rule on
/// both the entering and the leaving choice, so the method terminates on
/// every input; `pivot_budget` bounds the total pivot count and raises
/// BudgetExceededError when crossed.
LpSolution solve_lp(const LpProblem& problem, long long pivot_budget);

}  // namespace fraccol
