#ifndef SETLAT_SOLUTIONS_HPP
#define SETLAT_SOLUTIONS_HPP

#include "setlat/duality.hpp"

namespace setlat {

/// Verdicts are always relative to an explicit finite universe of
/// comparison points; nothing here claims minimality over all of X.

bool is_minimizer(const SetValuedMap& f, const Vec& x, const std::vector<Vec>& universe);
bool is_maximizer(const SetValuedMap& f, const Vec& x, const std::vector<Vec>& universe);

/// lattice_inf of f over the candidate set equals lattice_inf over the
/// universe (attainment of the infimum); is_supremizer is the dual.
bool is_infimizer(const SetValuedMap& f, const std::vector<Vec>& candidate,
                  const std::vector<Vec>& universe);
bool is_supremizer(const SetValuedMap& f, const std::vector<Vec>& candidate,
                   const std::vector<Vec>& universe);

enum class SolutionKind { NOT_SOLUTION, SOLUTION, FULL_SOLUTION };

/// SOLUTION: infimizer whose values are all minimal in f[universe];
/// FULL_SOLUTION: additionally covers every minimal value.
SolutionKind check_solution(const SetValuedMap& f, const std::vector<Vec>& candidate,
                            const std::vector<Vec>& universe);
/// Maximization counterpart (supremizer + maximal values).
SolutionKind check_solution_max(const SetValuedMap& f, const std::vector<Vec>& candidate,
                                const std::vector<Vec>& universe);

UpperSet inf_extension(const SetValuedMap& f, const std::vector<Vec>& M);
UpperSet sup_extension(const SetValuedMap& f, const std::vector<Vec>& M);

using LagrFn = std::function<UpperSet(const Vec&, const DualPair&)>;

/// Lower canonical extension sup_{w in W} inf_{x in U} l(x, w).
UpperSet lower_ext(const LagrFn& l, const std::vector<Vec>& U, const std::vector<DualPair>& W,
                   const PolyCone& cone);
/// Upper canonical extension inf_{x in U} sup_{w in W} l(x, w).
UpperSet upper_ext(const LagrFn& l, const std::vector<Vec>& U, const std::vector<DualPair>& W,
                   const PolyCone& cone);

struct SaddleUniverses {
    std::vector<Vec> xs;       // finite stand-in for X
    std::vector<DualPair> ws;  // finite stand-in for the dual variable space
};

struct SaddleVerdict {
    bool condition_a = false;  // minimality/maximality of the images
    bool condition_b = false;  // canonical-extension inequalities
    bool lemma_eq = false;     // sup_{V̄} d = inf_{X̄} p
    bool is_full = false;
    bool saddle() const { return condition_a && condition_b; }
};

/// Evaluates both saddle conditions for the Lagrangian of the instance over
/// the given universes, asserts condition_b <=> lemma_eq, and cross-checks
/// the saddle verdict against the independent primal/dual solution verdicts
/// (a hard failure if they disagree — that falsifies the implementation).
SaddleVerdict saddle_check(const ProblemInstance& inst, const std::vector<Vec>& xbar,
                           const std::vector<DualPair>& vbar, const SaddleUniverses& u);

}  // namespace setlat

#endif
