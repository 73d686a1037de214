#ifndef SETLAT_SCALARIZATION_HPP
#define SETLAT_SCALARIZATION_HPP

#include "setlat/maps.hpp"

namespace setlat {

/// phi_{f,z*}(x) = inf {z*.z : z in f(x)}; +inf off the domain.
ExtReal phi(const SetValuedMap& f, const Vec& zstar, const Vec& x);

/// Intersection over zstars of {z : phi_{f,z*}(x) <= z*.z}. Equals value(x)
/// when the family is facet-complete for it.
UpperSet reconstruct(const SetValuedMap& f, const Vec& x, const std::vector<Vec>& zstars);

/// Scalar Lagrangian lambda_{z*}(x, y*) = phi_{f,z*}(x) + phi_{g,y*}(x).
/// Throws indeterminate_error instead of evaluating (+inf) + (-inf).
ExtReal lambda(const SetValuedMap& f, const SetValuedMap& g, const Vec& zstar, const Vec& x,
               const Vec& ystar);

/// -phi*_{f,z*}(x*) = inf_x [phi_{f,z*}(x) - x*.x], by vertex/ray enumeration
/// of the domain (no simplex involved, so it can cross-check conjugate()).
ExtReal scalar_conjugate(const SetValuedMap& f, const Vec& zstar, const Vec& xstar);

}  // namespace setlat

#endif
