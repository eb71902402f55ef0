#include "gkz/lattice.hpp"

#include <cassert>

namespace gkz::lattice::detail {

namespace {

// Dense tableau for max-form simplex with Bland's rule. Rows are the
// constraints in canonical form, `obj` holds the reduced costs and `val` the
// current objective value. Exact rationals throughout.
struct Tableau {
    std::size_t m, n;                  // constraints, variables
    std::vector<RatVec> rows;          // m x n
    RatVec rhs;                        // m
    RatVec obj;                        // n (reduced costs, maximize)
    Rat val = 0;
    std::vector<std::size_t> basis;    // m, column basic in each row

    void pivot(std::size_t r, std::size_t c) {
        Rat inv_p = 1 / rows[r][c];
        for (std::size_t j = 0; j < n; ++j) rows[r][j] *= inv_p;
        rhs[r] *= inv_p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        if (obj[c] != 0) {
            Rat f = obj[c];
            for (std::size_t j = 0; j < n; ++j) obj[j] -= f * rows[r][j];
            val += f * rhs[r];
        }
        basis[r] = c;
    }

    // Bland: entering = lowest index with positive reduced cost; leaving =
    // lexicographic min ratio with lowest basis index tie-break.
    LpStatus run() {
        for (;;) {
            std::size_t enter = n;
            for (std::size_t j = 0; j < n; ++j)
                if (obj[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == n) return LpStatus::Optimal;
            std::size_t leave = m;
            Rat best_ratio;
            for (std::size_t i = 0; i < m; ++i) {
                if (rows[i][enter] <= 0) continue;
                Rat ratio = rhs[i] / rows[i][enter];
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult solve_lp(const std::vector<RatVec>& a_rows, const RatVec& b, const RatVec& c) {
    const std::size_t m = a_rows.size();
    const std::size_t n = m == 0 ? c.size() : a_rows[0].size();
    assert(b.size() == m && c.size() == n);

    Tableau t;
    t.m = m;
    t.n = n + m;  // original variables then artificials
    t.rows.assign(m, RatVec(t.n, Rat(0)));
    t.rhs = b;
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? -a_rows[i][j] : a_rows[i][j];
        if (flip) t.rhs[i] = -b[i];
        t.rows[i][n + i] = 1;
        t.basis[i] = n + i;
    }

    // Phase one: maximize minus the sum of artificials.
    t.obj.assign(t.n, Rat(0));
    t.val = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.obj[j] += t.rows[i][j];
        t.val -= t.rhs[i];
    }
    // obj currently = sum of rows restricted to real vars; reduced costs for
    // maximize(-sum z) in terms of nonbasic columns.
    LpStatus s1 = t.run();
    assert(s1 != LpStatus::Unbounded);
    (void)s1;
    if (t.val != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Drive surviving artificials out of the basis, then drop all artificial
    // columns and any redundant rows so phase two cannot re-enter them.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n) continue;
        std::size_t piv = n;
        for (std::size_t j = 0; j < n; ++j)
            if (t.rows[i][j] != 0) {
                piv = j;
                break;
            }
        if (piv != n) t.pivot(i, piv);
    }
    {
        std::vector<RatVec> rows2;
        RatVec rhs2;
        std::vector<std::size_t> basis2;
        for (std::size_t i = 0; i < t.m; ++i) {
            if (t.basis[i] >= n) {
                assert(t.rhs[i] == 0);  // redundant constraint
                continue;
            }
            t.rows[i].resize(n);
            rows2.push_back(std::move(t.rows[i]));
            rhs2.push_back(t.rhs[i]);
            basis2.push_back(t.basis[i]);
        }
        t.rows = std::move(rows2);
        t.rhs = std::move(rhs2);
        t.basis = std::move(basis2);
        t.m = t.rows.size();
        t.n = n;
    }

    // Phase two on the original objective.
    t.obj = c;
    t.val = 0;
    for (std::size_t i = 0; i < t.m; ++i) {
        Rat cb = c[t.basis[i]];
        if (cb == 0) continue;
        for (std::size_t j = 0; j < t.n; ++j) t.obj[j] -= cb * t.rows[i][j];
        t.val += cb * t.rhs[i];
    }

    LpStatus s2 = t.run();
    LpResult out;
    out.status = s2;
    out.value = t.val;
    out.solution.assign(n, Rat(0));
    for (std::size_t i = 0; i < t.m; ++i) out.solution[t.basis[i]] = t.rhs[i];
    return out;
}

}  // namespace gkz::lattice::detail
