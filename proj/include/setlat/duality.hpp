#ifndef SETLAT_DUALITY_HPP
#define SETLAT_DUALITY_HPP

#include <string>

#include "setlat/maps.hpp"
#include "setlat/scalarization.hpp"

namespace setlat {

/// Tolerance for scalar primal/dual value comparisons.
constexpr double kDualTol = 1e-7;
/// Interior margin for the Slater witness search.
constexpr double kSlaterMargin = 1e-6;

/// minimize f(x) subject to 0 in g(x). f maps into G(C), g into G(D).
struct ProblemInstance {
    SetValuedMap f;
    SetValuedMap g;
    int n() const { return f.arg_dim(); }
    int q() const { return f.cone().dim(); }
    int m() const { return g.cone().dim(); }
    const PolyCone& C() const { return f.cone(); }
    const PolyCone& D() const { return g.cone(); }
};

ProblemInstance make_instance(SetValuedMap f, SetValuedMap g);

/// 0 in g(x), evaluated through both characterizations (membership and
/// g(x) meeting -D); they are asserted to agree.
bool feasible(const ProblemInstance& inst, const Vec& x);

/// l(x, y*, z*) = f(x) (+) {z : inf_{y in g(x)} y*.y <= z*.z}; EMPTY when
/// g(x) is empty, FULL half-space part when that infimum is -inf.
UpperSet lagrangian(const ProblemInstance& inst, const Vec& x, const DualPair& pair);

/// Intersection of lagrangian(x, .) over the pairs; for infeasible x the
/// separating y* is scaled by n = 1, 2, 4, ... until the intersection is
/// certifiably empty (LP infeasibility of the collected half-spaces).
UpperSet reconstruct_primal(const ProblemInstance& inst, const Vec& x,
                            const std::vector<DualPair>& pairs);

/// v(y) = cl co U {f(x) : y in g(x)}, by double description over the lifted
/// feasible polyhedron. EMPTY when no x qualifies.
UpperSet value_function(const ProblemInstance& inst, const Vec& y);

/// h(y*, z*) = cl U_x l(x, y*, z*) = {z : inf_x lambda_{z*}(x, y*) <= z*.z};
/// FULL when that infimum is -inf, EMPTY when no x has l(x,y*,z*) nonempty.
UpperSet dual_objective(const ProblemInstance& inst, const DualPair& pair);

/// Vertices of the feasible region {x in dom f and dom g : 0 in g(x)};
/// the natural finite universe for solution and saddle checks.
std::vector<Vec> feasible_vertices(const ProblemInstance& inst);

UpperSet primal_value(const ProblemInstance& inst);
UpperSet dual_value(const ProblemInstance& inst, const std::vector<DualPair>& pairs);

/// The value function as a set-valued map of (x, y) jointly; partial
/// infimum over x recovers v, so conjugates of v reduce to conjugates of
/// this lifted map at x* = (0, y*).
SetValuedMap lifted_value_map(const ProblemInstance& inst);

/// -v*(y*, z*) via the lifted map. Independent of dual_objective's LP path
/// only in formulation; both must agree (Prop.-level identity).
UpperSet value_conjugate(const ProblemInstance& inst, const Vec& ystar, const Vec& zstar);

struct WeakDualityReport {
    bool pass = true;
    int checked = 0;
    std::string witness;  // first violation, if any
};

/// Asserts h(y*,z*) superset of f(x) (+) S(z*) (set form) and the scalar form
/// phi_h <= phi_f for every sampled feasible x and pair; the two verdicts are
/// compared point by point.
WeakDualityReport weak_duality_check(const ProblemInstance& inst, const std::vector<Vec>& xs,
                                     const std::vector<DualPair>& pairs);

enum class SlaterStatus { HOLDS, FAILS, INAPPLICABLE };

struct SlaterResult {
    SlaterStatus status = SlaterStatus::FAILS;
    Vec xbar;  // witness in dom f with g(xbar) meeting int(-D)
    Vec ybar;  // the interior point of -D found in g(xbar)
};

/// Searches by LP for xbar in dom f with g(xbar) meeting the interior of -D
/// (margin kSlaterMargin). INAPPLICABLE when D is not full-dimensional.
SlaterResult slater_check(const ProblemInstance& inst);

struct DualEntry {
    DualPair pair;       // z* unit 1-norm
    double h_offset;     // beta with h(y*,z*) = {z : beta <= z*.z}
    double scalar_value; // p_{z*}
};

struct DualSolutionSet {
    std::vector<DualEntry> entries;
    bool complete = false;  // facet-complete for p
};

struct DirectionRow {
    Vec zstar;
    ExtReal p_z;
    ExtReal d_z;
    Vec ystar;
};

struct ValueReport {
    UpperSet p;
    UpperSet d;
    std::vector<DirectionRow> table;
    bool slater = false;
    bool certified = false;  // strong-duality certificate assembled and verified
    double gap_certificate = 0.0;
    std::string note;
};

struct StrongDualityResult {
    ValueReport report;
    DualSolutionSet delta;
};

/// Computes p polyhedrally, drives the scalar LP family on its facet
/// normals, extracts y* from the constraint multipliers, assembles Delta,
/// and verifies p = d along with the membership/maximality checks against
/// a deterministic sample of non-Delta pairs.
StrongDualityResult solve_strong(const ProblemInstance& inst);

/// Separable problem: f(x) = sum_n f_n(x^n), g(x) = {sum_n A_n x^n - b} + R^M_+.
struct PSepProblem {
    ProblemInstance inst;
    std::vector<SetValuedMap> parts;  // the f_n
    std::vector<Mat> A;
    Vec b;
};

PSepProblem psep_build(const std::vector<SetValuedMap>& parts, const std::vector<Mat>& A,
                       const Vec& b);

/// Decomposed dual h(v, w) = S_{(v,w)}(b) (+) sum_n -f*_n(A_n^T v, w),
/// asserted equal to the generic dual_objective at y* = -v when -v lies
/// in D+ (outside that range the generic dual is FULL and the formulas
/// legitimately differ).
UpperSet psep_dual(const PSepProblem& ps, const Vec& v, const Vec& w);

}  // namespace setlat

#endif
