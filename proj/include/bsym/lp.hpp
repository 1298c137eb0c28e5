#pragma once

// Linear programming bound for b-symbol codes.
//
// The free variables are the distance-distribution entries B_i, d <= i <= n.
// Each window of length b expands to a simplex-code block of length
// (q^b - 1)/(q - 1) and weight q^(b-1), so b-symbol distance i becomes Hamming
// distance i*q^(b-1) in length N = n(q^b - 1)/(q - 1), and the Delsarte
// inequalities read
//
//   K_k^{N,q}(0) + sum_i B_i K_k^{N,q}(i q^(b-1)) >= 0,   0 <= k <= n.

#include "bsym/numeric.hpp"
#include "bsym/params.hpp"
#include "bsym/simplex.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bsym {

/// K_k^{n,q}(x) = sum_j (-1)^j (q-1)^(k-j) C(x, j) C(n-x, k-j); requires 0 <= k, x <= n.
BigInt krawtchouk(std::uint64_t n, std::uint32_t q, std::uint64_t k, std::uint64_t x);

struct LPRow {
    std::size_t k = 0;
    BigInt constant;                  // K_k(0), contributed by B_0 = 1
    std::vector<BigInt> coefficients; // K_k(i q^(b-1)) for each variable
};

struct LPProblem {
    std::uint32_t q = 2;
    std::size_t b = 1;
    std::size_t n = 1;
    std::size_t d = 1;
    std::uint64_t big_n = 1;          // N = n (q^b - 1)/(q - 1)
    std::uint64_t scale = 1;          // q^(b-1)
    std::vector<std::size_t> variables;  // distance indices d..n
    std::vector<LPRow> rows;          // row reads constant + coefficients . B >= 0
    bool extended = false;            // rows beyond k = n were requested
};

struct LPSolution {
    SolveStatus status = SolveStatus::Infeasible;
    Rational optimum = 0;             // 1 + sum of B_i
    std::vector<Rational> assignment; // one entry per variable
    std::size_t pivots = 0;
};

/// Rows k = 0..n by default; `k_max` (<= N) adds the further Delsarte rows.
/// Accepts d = n + 1, which leaves no variables.
LPProblem build_lp(std::uint32_t q, std::size_t b, std::size_t n, std::size_t d,
                   std::optional<std::uint64_t> k_max = std::nullopt);
LPProblem build_lp(const Params& p, std::optional<std::uint64_t> k_max = std::nullopt);

LPSolution solve_lp(const LPProblem& lp);

/// floor of the LP optimum; throws SolverError if the LP is not optimal.
BoundValue lp_upper(const Params& p, std::optional<std::uint64_t> k_max = std::nullopt);

enum class DumpFormat { Human, Machine };

/// Human: the objective and one inequality per row in the usual textbook layout.
/// Machine: "max", the objective line (constant first, then one coefficient per
/// variable), "st", one "c_1 ... c_m >= rhs" line per row, "end".
std::string dump_lp(const LPProblem& lp, DumpFormat format);

/// Evaluates every row at a candidate distribution B_0..B_n (B_0 must be 1 for
/// a normalized distribution); returns constant + sum B_i K_k(i q^(b-1)) per row.
std::vector<Rational> evaluate_rows(const LPProblem& lp, const std::vector<Rational>& distribution);

}  // namespace bsym
