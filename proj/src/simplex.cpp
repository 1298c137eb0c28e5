#include "bsym/simplex.hpp"

#include "bsym/error.hpp"

#include <optional>

namespace bsym {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
    }
    return "?";
}

namespace {

// Rows read basic[i] + sum_j a[i][j] x_j = b[i]; the objective reads
// z = z0 + sum_j cost[j] x_j over nonbasic j.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : a(rows, std::vector<Rational>(cols, 0)), b(rows, 0), basic(rows, 0), cost(cols, 0) {}

    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = 1 / a[row][col];
        for (auto& v : a[row]) v *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j < a[i].size(); ++j)
                if (a[row][j] != 0) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        if (cost[col] != 0) {
            const Rational f = cost[col];
            for (std::size_t j = 0; j < cost.size(); ++j)
                if (a[row][j] != 0) cost[j] -= f * a[row][j];
            z0 += f * b[row];
        }
        basic[row] = col;
        ++pivots;
    }

    // Bland: smallest improving column, then smallest basic index among ratio ties.
    // Returns false when optimal; throws nothing, reports unbounded via the flag.
    bool step(const std::vector<bool>& allowed, bool& unbounded) {
        std::optional<std::size_t> enter;
        for (std::size_t j = 0; j < cost.size(); ++j) {
            if (allowed[j] && cost[j] > 0) {
                enter = j;
                break;
            }
        }
        if (!enter) return false;
        std::optional<std::size_t> leave;
        Rational best;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i][*enter] <= 0) continue;
            const Rational ratio = b[i] / a[i][*enter];
            if (!leave || ratio < best || (ratio == best && basic[i] < basic[*leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (!leave) {
            unbounded = true;
            return false;
        }
        pivot(*leave, *enter);
        return true;
    }

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<std::size_t> basic;
    std::vector<Rational> cost;
    Rational z0 = 0;
    std::size_t pivots = 0;
};

}  // namespace

SimplexResult solve_simplex(const LinearProgram& lp) {
    const std::size_t nv = lp.objective.size();
    const std::size_t m = lp.rows.size();
    if (lp.rhs.size() != m) throw ParameterError("simplex: rhs size does not match the row count");
    for (const auto& row : lp.rows)
        if (row.size() != nv) throw ParameterError("simplex: row width does not match the objective");

    // Columns: decision variables [0, nv), slacks [nv, nv+m), auxiliary nv+m.
    const std::size_t aux = nv + m;
    Tableau t(m, nv + m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < nv; ++j) t.a[i][j] = lp.rows[i][j];
        t.a[i][nv + i] = 1;
        t.a[i][aux] = -1;
        t.b[i] = lp.rhs[i];
        t.basic[i] = nv + i;
    }

    SimplexResult result;
    std::vector<bool> allowed(nv + m + 1, true);

    std::optional<std::size_t> most_negative;
    for (std::size_t i = 0; i < m; ++i)
        if (t.b[i] < 0 && (!most_negative || t.b[i] < t.b[*most_negative])) most_negative = i;

    if (most_negative) {
        // Phase one: maximize -aux.
        t.cost[aux] = -1;
        t.pivot(*most_negative, aux);
        bool unbounded = false;
        while (t.step(allowed, unbounded)) {
        }
        if (t.z0 < 0) {
            result.status = SolveStatus::Infeasible;
            result.pivots = t.pivots;
            return result;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basic[i] != aux) continue;
            for (std::size_t j = 0; j < aux; ++j) {
                if (t.a[i][j] != 0) {
                    t.pivot(i, j);
                    break;
                }
            }
        }
    }
    allowed[aux] = false;

    // Phase two objective in terms of the current nonbasic variables.
    std::fill(t.cost.begin(), t.cost.end(), Rational(0));
    t.z0 = lp.constant;
    for (std::size_t j = 0; j < nv; ++j) t.cost[j] = lp.objective[j];
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t bv = t.basic[i];
        if (bv >= nv || lp.objective[bv] == 0) continue;
        const Rational f = lp.objective[bv];
        for (std::size_t j = 0; j < t.cost.size(); ++j) t.cost[j] -= f * t.a[i][j];
        t.z0 += f * t.b[i];
    }
    for (std::size_t i = 0; i < m; ++i) t.cost[t.basic[i]] = 0;

    bool unbounded = false;
    while (t.step(allowed, unbounded)) {
    }
    result.pivots = t.pivots;
    if (unbounded) {
        result.status = SolveStatus::Unbounded;
        return result;
    }
    result.status = SolveStatus::Optimal;
    result.optimum = t.z0;
    result.x.assign(nv, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basic[i] < nv) result.x[t.basic[i]] = t.b[i];
    return result;
}

}  // namespace bsym
