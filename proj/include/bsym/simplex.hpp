#pragma once

// Exact rational primal simplex.
//
//   maximize   constant + objective . x
//   subject to rows[i] . x <= rhs[i],  x >= 0
//
// Dense tableau, two phases (an auxiliary variable handles negative right-hand
// sides) and Bland's smallest-index rule for both entering and leaving
// variables, so the method cannot cycle.

#include "bsym/numeric.hpp"

#include <cstddef>
#include <vector>

namespace bsym {

struct LinearProgram {
    std::vector<Rational> objective;
    Rational constant = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

const char* to_string(SolveStatus s);

struct SimplexResult {
    SolveStatus status = SolveStatus::Infeasible;
    Rational optimum = 0;
    std::vector<Rational> x;
    std::size_t pivots = 0;
};

/// Throws ParameterError if row widths disagree with the objective.
SimplexResult solve_simplex(const LinearProgram& lp);

}  // namespace bsym
