#include "setlat/examples.hpp"

namespace setlat {
namespace examples {

SetValuedMap sec3_objective() {
    PolyCone C = orthant(2);
    auto eval = [C](const Vec& x) -> UpperSet {
        double t = x(0);
        if (t < -kGeomTol) return UpperSet::empty(C);
        double lo = 3.0 + 2.0 * t - t * t;
        double hi = 3.0 + 2.0 * t + t * t;
        Vec a(2), b(2);
        a << lo, hi;
        b << hi, lo;
        UpperSet seg = upper_close({a, b}, {}, C);
        UpperSet quad = upper_close({Vec::Zero(2)}, {}, C);
        return lattice_sup({seg, quad});
    };
    return SetValuedMap::parametric(1, eval, C);
}

ProblemInstance running_instance() {
    PolyCone C = orthant(2);
    PolyCone D = orthant(1);
    Mat Ef(1, 1);
    Ef << -1.0;  // x >= 0
    Vec ef = Vec::Zero(1);
    Mat F(2, 1);
    F << 1.0, 1.0;
    SetValuedMap f = SetValuedMap::affine(
        Polyhedron{Ef, ef}, {{F, Vec::Zero(2), upper_close({Vec::Zero(2)}, {}, C)}}, C);
    Mat G(1, 1);
    G << 1.0;
    Vec cg = Vec::Constant(1, -1.0);
    SetValuedMap g = SetValuedMap::affine(
        Polyhedron::whole_space(1), {{G, cg, upper_close({Vec::Zero(1)}, {}, D)}}, D);
    return make_instance(std::move(f), std::move(g));
}

PSepProblem psep_fixture() {
    PolyCone C = orthant(2);
    Mat E(1, 1);
    E << -1.0;
    Vec e = Vec::Zero(1);
    Mat F(2, 1);
    F << 1.0, 1.0;
    UpperSet Q = upper_close({Vec::Zero(2)}, {}, C);
    SetValuedMap part = SetValuedMap::affine(Polyhedron{E, e}, {{F, Vec::Zero(2), Q}}, C);
    Mat A(1, 1);
    A << 1.0;
    Vec b = Vec::Constant(1, 1.0);
    return psep_build({part, part}, {A, A}, b);
}

}  // namespace examples
}  // namespace setlat
