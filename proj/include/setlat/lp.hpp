#ifndef SETLAT_LP_HPP
#define SETLAT_LP_HPP

#include <optional>

#include "setlat/cone.hpp"
#include "setlat/ext_real.hpp"

namespace setlat {

/// Feasibility / optimality tolerance of the simplex solver.
constexpr double kLpTol = 1e-8;

/// min c.x subject to M x <= r (variables free unless bounds given).
struct LinearProgram {
    Vec c;
    Mat M;
    Vec r;
    std::optional<Vec> lower;  // per-variable, -inf allowed
    std::optional<Vec> upper;  // per-variable, +inf allowed
};

enum class LPStatus { OPTIMAL, UNBOUNDED, INFEASIBLE, NUMERICAL_FAILURE };

/// Multipliers satisfy mu >= 0, c + M^T mu = 0 and mu.(Mx* - r) = 0, so the
/// certified optimal value is c.x* = -r.mu (rows only; bound rows folded in).
struct LPOutcome {
    LPStatus status = LPStatus::NUMERICAL_FAILURE;
    ExtReal optimal_value = ExtReal::pos_inf();
    Vec primal_point;
    Vec multipliers;  // one per row of M
};

LPOutcome solve_lp(const LinearProgram& lp);

/// Phase-1 style feasibility check for {x : Mx <= r}; returns a point if any.
std::optional<Vec> find_feasible(const Mat& M, const Vec& r);

}  // namespace setlat

#endif
