#pragma once

#include <vector>

#include "nubar/rational.hpp"

namespace nubar {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    Rational value;                 // optimal objective (maximization)
    std::vector<Rational> solution; // structural variables only
};

// Exact rational simplex for max c.x subject to A x <= b, x >= 0, with b of
// arbitrary sign (two phases, single artificial column). Bland's pivoting
// rule throughout, so termination is unconditional.
LpResult simplex_max(const std::vector<std::vector<Rational>>& A,
                     const std::vector<Rational>& b, const std::vector<Rational>& c);

// Feasibility of {x >= 0 : A x <= b}.
bool lp_feasible(const std::vector<std::vector<Rational>>& A,
                 const std::vector<Rational>& b);

} // namespace nubar
