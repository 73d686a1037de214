#ifndef SETLAT_EXAMPLES_HPP
#define SETLAT_EXAMPLES_HPP

#include "setlat/duality.hpp"

namespace setlat {
namespace examples {

/// One-parameter family over x >= 0 in R^2 with cone R^2_+: the upper
/// closure of the segment between (3+2x-x^2, 3+2x+x^2) and its swap,
/// intersected with the nonnegative quadrant. Parametric (non-affine in x).
SetValuedMap sec3_objective();

/// f(x) = {(x,x)} + R^2_+ on x >= 0, constraint 0 in {x-1} + R_+
/// (i.e. x <= 1). Primal value is the full quadrant R^2_+.
ProblemInstance running_instance();

/// Two-block separable fixture: f_n(t) = {(t,t)} + R^2_+ on t >= 0,
/// coupling t_1 + t_2 <= 1.
PSepProblem psep_fixture();

}  // namespace examples
}  // namespace setlat

#endif
