#include "fraccol/simplex.hpp"

#include <algorithm>

#include "fraccol/errors.hpp"

namespace fraccol {

namespace {

// Dense tableau in equality standard form.  Column layout: structurals,
// then one slack (+1) or surplus (-1) per inequality row, then artificials.
struct Tableau {
    int rows = 0, cols = 0;
    std::vector<std::vector<Rational>> t;  // rows x cols, T = B^{-1} A
    std::vector<Rational> rhs;             // B^{-1} b
    std::vector<int> basis;                // basic variable per row
    std::vector<char> banned;              // columns barred from entering
    long long pivots = 0, pivot_budget = 0;

    void pivot(int row, int col) {
        if (++pivots > pivot_budget)
            throw BudgetExceededError("simplex exceeded its pivot budget");
        Rational inv = Rational(1) / t[row][col];
        for (auto& v : t[row]) v *= inv;
        rhs[row] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || t[r][col] == 0) continue;
            Rational factor = t[r][col];
            for (int j = 0; j < cols; ++j) t[r][j] -= factor * t[row][j];
            rhs[r] -= factor * rhs[row];
        }
        basis[row] = col;
    }

    // Minimizes `cost` from the current basis; returns false on unboundedness.
    bool optimize(const std::vector<Rational>& cost) {
        for (;;) {
            // Reduced costs; entering column = smallest index with r_j < 0.
            int enter = -1;
            for (int j = 0; j < cols && enter < 0; ++j) {
                if (banned[j]) continue;
                Rational z = 0;
                for (int r = 0; r < rows; ++r)
                    if (cost[basis[r]] != 0) z += cost[basis[r]] * t[r][j];
                if (cost[j] - z < 0) enter = j;
            }
            if (enter < 0) return true;

            // Ratio test; ties broken by smallest basic variable index (Bland).
            int leave = -1;
            Rational best_ratio = 0;
            for (int r = 0; r < rows; ++r) {
                if (t[r][enter] <= 0) continue;
                Rational ratio = rhs[r] / t[r][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    Rational objective(const std::vector<Rational>& cost) const {
        Rational z = 0;
        for (int r = 0; r < rows; ++r) z += cost[basis[r]] * rhs[r];
        return z;
    }

    // Multiplier of row `row` read off a unit column (+e_row, zero cost).
    Rational row_dual(int unit_col, const std::vector<Rational>& cost) const {
        Rational z = 0;
        for (int r = 0; r < rows; ++r)
            if (cost[basis[r]] != 0) z += cost[basis[r]] * t[r][unit_col];
        return z;
    }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem, long long pivot_budget) {
    const int m = static_cast<int>(problem.a.size());
    const int n = static_cast<int>(problem.c.size());
    if (static_cast<int>(problem.b.size()) != m || static_cast<int>(problem.rel.size()) != m)
        throw MalformedInputError("LP row data sizes disagree");

    // Normalize to b >= 0, remembering row sign flips for the duals.
    std::vector<std::vector<Rational>> a = problem.a;
    std::vector<Rational> b = problem.b;
    std::vector<char> rel = problem.rel;
    std::vector<char> flipped(m, 0);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(a[i].size()) != n) throw MalformedInputError("LP row length mismatch");
        if (b[i] < 0) {
            flipped[i] = 1;
            b[i] = -b[i];
            for (auto& v : a[i]) v = -v;
            rel[i] = rel[i] == '<' ? '>' : (rel[i] == '>' ? '<' : '=');
        }
    }

    // Column layout.
    std::vector<int> slack_col(m, -1), art_col(m, -1), unit_col(m, -1);
    int cols = n;
    for (int i = 0; i < m; ++i)
        if (rel[i] != '=') slack_col[i] = cols++;
    for (int i = 0; i < m; ++i)
        if (rel[i] != '<') art_col[i] = cols++;  // '>' and '=' rows need artificials

    Tableau tab;
    tab.rows = m;
    tab.cols = cols;
    tab.pivot_budget = pivot_budget;
    tab.t.assign(m, std::vector<Rational>(cols, Rational(0)));
    tab.rhs = b;
    tab.basis.assign(m, -1);
    tab.banned.assign(cols, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) tab.t[i][j] = a[i][j];
        if (slack_col[i] >= 0) tab.t[i][slack_col[i]] = rel[i] == '<' ? 1 : -1;
        if (art_col[i] >= 0) tab.t[i][art_col[i]] = 1;
        tab.basis[i] = art_col[i] >= 0 ? art_col[i] : slack_col[i];
        unit_col[i] = art_col[i] >= 0 ? art_col[i] : slack_col[i];  // +e_i column
    }

    LpSolution out;

    // Phase 1: drive the artificials to zero.
    bool any_artificial = std::any_of(art_col.begin(), art_col.end(), [](int c) { return c >= 0; });
    std::vector<Rational> phase1_cost(cols, Rational(0));
    if (any_artificial) {
        for (int i = 0; i < m; ++i)
            if (art_col[i] >= 0) phase1_cost[art_col[i]] = 1;
        if (!tab.optimize(phase1_cost))
            throw InternalInvariantError("phase-1 objective is bounded by construction");
        if (tab.objective(phase1_cost) != 0) {
            out.status = LpStatus::Infeasible;
            return out;
        }
        // Pivot stranded artificials out where possible; redundant rows keep
        // a zero-level artificial that is barred from re-entering.
        for (int r = 0; r < m; ++r) {
            int bcol = tab.basis[r];
            bool is_art = false;
            for (int i = 0; i < m; ++i) is_art |= (art_col[i] == bcol);
            if (!is_art) continue;
            for (int j = 0; j < cols; ++j) {
                bool j_art = false;
                for (int i = 0; i < m; ++i) j_art |= (art_col[i] == j);
                if (j_art || tab.t[r][j] == 0) continue;
                tab.pivot(r, j);
                break;
            }
        }
        for (int i = 0; i < m; ++i)
            if (art_col[i] >= 0) tab.banned[art_col[i]] = 1;
    }

    // Phase 2.
    std::vector<Rational> cost(cols, Rational(0));
    for (int j = 0; j < n; ++j) cost[j] = problem.c[j];
    if (!tab.optimize(cost)) {
        out.status = LpStatus::Unbounded;
        return out;
    }

    out.status = LpStatus::Optimal;
    out.objective = tab.objective(cost);
    out.x.assign(n, Rational(0));
    for (int r = 0; r < m; ++r)
        if (tab.basis[r] < n) out.x[tab.basis[r]] = tab.rhs[r];
    out.dual.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
        // unit_col[i] is a +e_i column of cost zero, so its z-value is y_i.
        Rational y = tab.row_dual(unit_col[i], cost);
        out.dual[i] = flipped[i] ? -y : y;
    }
    return out;
}

}  // namespace fraccol
