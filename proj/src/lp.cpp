#include "bsym/lp.hpp"

#include "bsym/error.hpp"

#include <sstream>

namespace bsym {

BigInt krawtchouk(std::uint64_t n, std::uint32_t q, std::uint64_t k, std::uint64_t x) {
    if (q < 2) throw ParameterError("krawtchouk: q must be at least 2");
    if (k > n || x > n) throw ParameterError("krawtchouk: requires 0 <= k, x <= n");
    BigInt sum = 0;
    const auto sx = static_cast<std::int64_t>(x);
    const auto rest = static_cast<std::int64_t>(n - x);
    for (std::uint64_t j = 0; j <= k; ++j) {
        BigInt term = ipow(q - 1, k - j) * binomial(sx, static_cast<std::int64_t>(j)) *
                      binomial(rest, static_cast<std::int64_t>(k - j));
        if (j % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

LPProblem build_lp(std::uint32_t q, std::size_t b, std::size_t n, std::size_t d, std::optional<std::uint64_t> k_max) {
    if (q < 2 || b < 1 || n < b) throw ParameterError("build_lp requires q >= 2 and 1 <= b <= n");
    if (d < 1 || d > n + 1) throw ParameterError("build_lp requires 1 <= d <= n + 1");

    LPProblem lp;
    lp.q = q;
    lp.b = b;
    lp.n = n;
    lp.d = d;
    // (q^b - 1)/(q - 1) = 1 + q + ... + q^(b-1).
    std::uint64_t block = 0, power = 1;
    for (std::size_t j = 0; j < b; ++j) {
        block += power;
        if (j + 1 < b) power *= q;
    }
    lp.scale = power;
    lp.big_n = block * n;
    for (std::size_t i = d; i <= n; ++i) lp.variables.push_back(i);

    const std::uint64_t last = k_max.value_or(n);
    if (last > lp.big_n) throw ParameterError("k_max exceeds N = " + std::to_string(lp.big_n));
    lp.extended = last > n;
    for (std::uint64_t k = 0; k <= last; ++k) {
        LPRow row;
        row.k = k;
        row.constant = krawtchouk(lp.big_n, q, k, 0);
        for (std::size_t i : lp.variables) row.coefficients.push_back(krawtchouk(lp.big_n, q, k, i * lp.scale));
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

LPProblem build_lp(const Params& p, std::optional<std::uint64_t> k_max) {
    return build_lp(p.q(), p.b(), p.n(), p.d(), k_max);
}

LPSolution solve_lp(const LPProblem& lp) {
    LinearProgram program;
    program.objective.assign(lp.variables.size(), 1);
    program.constant = 1;
    for (const auto& row : lp.rows) {
        // constant + c . B >= 0  <=>  -c . B <= constant
        std::vector<Rational> coeffs;
        coeffs.reserve(row.coefficients.size());
        for (const auto& c : row.coefficients) coeffs.emplace_back(-c);
        program.rows.push_back(std::move(coeffs));
        program.rhs.emplace_back(row.constant);
    }
    const SimplexResult r = solve_simplex(program);
    LPSolution s;
    s.status = r.status;
    s.optimum = r.optimum;
    s.assignment = r.x;
    s.pivots = r.pivots;
    return s;
}

BoundValue lp_upper(const Params& p, std::optional<std::uint64_t> k_max) {
    const LPProblem lp = build_lp(p, k_max);
    const LPSolution sol = solve_lp(lp);
    if (sol.status != SolveStatus::Optimal)
        throw SolverError(std::string("LP bound solve ended ") + to_string(sol.status));
    BoundValue v = make_upper(lp.extended ? "lp-ext" : "lp", sol.optimum);
    v.detail = "pivots=" + std::to_string(sol.pivots);
    if (lp.extended) v.detail += " k_max=" + std::to_string(lp.rows.back().k);
    return v;
}

namespace {

std::string human_row(const BigInt& constant, const std::vector<BigInt>& coefficients,
                      const std::vector<std::size_t>& variables) {
    std::ostringstream out;
    out << constant.get_str();
    for (std::size_t j = 0; j < variables.size(); ++j) {
        const BigInt& c = coefficients[j];
        if (c == 0) continue;
        out << (c < 0 ? " - " : " + ");
        const BigInt mag = abs(c);
        if (mag != 1) out << mag.get_str();
        out << "B_" << variables[j];
    }
    return out.str();
}

}  // namespace

std::string dump_lp(const LPProblem& lp, DumpFormat format) {
    std::ostringstream out;
    if (format == DumpFormat::Human) {
        std::vector<BigInt> ones(lp.variables.size(), 1);
        out << "maximize z = " << human_row(1, ones, lp.variables) << '\n';
        if (lp.variables.empty()) return out.str();
        out << "subject to\n";
        for (const auto& row : lp.rows) out << "  " << human_row(row.constant, row.coefficients, lp.variables) << " >= 0\n";
        out << "  B_i >= 0 for " << lp.d << " <= i <= " << lp.n << '\n';
        return out.str();
    }
    out << "max\n1";
    for (std::size_t j = 0; j < lp.variables.size(); ++j) out << " 1";
    out << "\nst\n";
    if (!lp.variables.empty()) {
        for (const auto& row : lp.rows) {
            for (std::size_t j = 0; j < row.coefficients.size(); ++j) out << (j ? " " : "") << row.coefficients[j].get_str();
            out << " >= " << BigInt(-row.constant).get_str() << '\n';
        }
    }
    out << "end\n";
    return out.str();
}

std::vector<Rational> evaluate_rows(const LPProblem& lp, const std::vector<Rational>& distribution) {
    if (distribution.size() != lp.n + 1) throw DimensionError("distribution must have n + 1 entries");
    std::vector<Rational> values;
    values.reserve(lp.rows.size());
    for (const auto& row : lp.rows) {
        Rational sum = 0;
        for (std::size_t i = 0; i <= lp.n; ++i) {
            if (distribution[i] == 0) continue;
            sum += distribution[i] * Rational(krawtchouk(lp.big_n, lp.q, row.k, i * lp.scale));
        }
        values.push_back(sum);
    }
    return values;
}

}  // namespace bsym
