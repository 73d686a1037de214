#include "setlat/scalarization.hpp"

#include <stdexcept>

namespace setlat {

ExtReal phi(const SetValuedMap& f, const Vec& zstar, const Vec& x) {
    return support(f.value(x), zstar);
}

UpperSet reconstruct(const SetValuedMap& f, const Vec& x, const std::vector<Vec>& zstars) {
    if (zstars.empty()) throw std::invalid_argument("reconstruct: empty z* family");
    const PolyCone& cone = f.cone();
    std::vector<Halfspace> hs;
    for (const auto& zs : zstars) {
        if (zs.lpNorm<1>() <= kGeomTol || !cone.dual_contains(zs))
            throw std::invalid_argument("reconstruct: z* must lie in C+ \\ {0}");
        ExtReal level = phi(f, zs, x);
        if (level.is_pos_inf()) return UpperSet::empty(cone);
        if (level.is_neg_inf()) continue;  // the half space degenerates to Z
        hs.push_back({zs, level.value()});
    }
    if (hs.empty()) return UpperSet::full(cone);
    return from_hrep(hs, cone);
}

ExtReal lambda(const SetValuedMap& f, const SetValuedMap& g, const Vec& zstar, const Vec& x,
               const Vec& ystar) {
    return phi(f, zstar, x) + support(g.value(x), ystar);
}

ExtReal scalar_conjugate(const SetValuedMap& f, const Vec& zstar, const Vec& xstar) {
    if (!f.is_affine()) throw std::invalid_argument("scalar_conjugate: affine-piece form required");
    if (zstar.lpNorm<1>() <= kGeomTol || !f.cone().dual_contains(zstar))
        throw std::invalid_argument("scalar_conjugate: z* must lie in C+ \\ {0}");
    PolyVRep dom = enumerate_vrep(f.domain());
    if (dom.vertices.empty()) return ExtReal::pos_inf();
    ExtReal best = ExtReal::pos_inf();
    for (const auto& p : f.pieces()) {
        if (p.Q.is_empty()) continue;
        ExtReal suppQ = support(p.Q, zstar);
        if (suppQ.is_neg_inf()) return ExtReal::neg_inf();
        Vec grad = p.F.transpose() * zstar - xstar;
        for (const auto& d : dom.rays)
            if (grad.dot(d) < -kGeomTol) return ExtReal::neg_inf();
        double piece_min = std::numeric_limits<double>::infinity();
        for (const auto& v : dom.vertices) piece_min = std::min(piece_min, grad.dot(v));
        best = min(best, ExtReal(piece_min + zstar.dot(p.c)) + suppQ);
    }
    return best;
}

}  // namespace setlat
