#include "setlat/maps.hpp"

#include <stdexcept>

#include "setlat/dd.hpp"
#include "setlat/lp.hpp"

namespace setlat {

bool Polyhedron::contains(const Vec& x, double tol) const {
    if (x.size() != dim()) return false;
    for (int i = 0; i < E.rows(); ++i)
        if (E.row(i).dot(x) > e(i) + tol * (1.0 + std::abs(e(i)) + x.lpNorm<1>())) return false;
    return true;
}

Polyhedron Polyhedron::whole_space(int n) { return Polyhedron{Mat::Zero(0, n), Vec::Zero(0)}; }

Polyhedron Polyhedron::box(int n, double lo, double hi) {
    Mat E(2 * n, n);
    Vec e(2 * n);
    for (int j = 0; j < n; ++j) {
        E.row(2 * j) = Vec::Unit(n, j).transpose();
        e(2 * j) = hi;
        E.row(2 * j + 1) = -Vec::Unit(n, j).transpose();
        e(2 * j + 1) = -lo;
    }
    return Polyhedron{E, e};
}

PolyVRep enumerate_vrep(const Polyhedron& P) {
    const int n = P.dim();
    Mat M(P.E.rows() + 1, n + 1);
    for (int i = 0; i < P.E.rows(); ++i) {
        M.block(i, 0, 1, n) = -P.E.row(i);
        M(i, n) = P.e(i);
    }
    M.row(P.E.rows()).setZero();
    M(P.E.rows(), n) = 1.0;
    auto cg = dd::cone_generators(M);
    PolyVRep out;
    for (const auto& l : cg.lineality) {
        out.rays.push_back(l.head(n));
        out.rays.push_back(-l.head(n));
    }
    for (const auto& g : cg.rays) {
        if (g(n) > 1e-9)
            out.vertices.push_back(g.head(n) / g(n));
        else
            out.rays.push_back(g.head(n));
    }
    out.rays = canonical_directions(std::move(out.rays));
    return out;
}

SetValuedMap SetValuedMap::affine(Polyhedron domain, std::vector<Piece> pieces,
                                  const PolyCone& cone, bool declared_convex) {
    SetValuedMap f(cone);
    f.arg_dim_ = domain.dim();
    for (const auto& p : pieces) {
        if (p.F.rows() != cone.dim() || p.F.cols() != f.arg_dim_ || p.c.size() != cone.dim())
            throw std::invalid_argument("SetValuedMap: piece dimension mismatch");
        if (!(p.Q.cone() == cone)) throw std::invalid_argument("SetValuedMap: piece cone mismatch");
    }
    f.domain_ = std::move(domain);
    f.pieces_ = std::move(pieces);
    f.convex_ = declared_convex && f.pieces_.size() <= 1;
    return f;
}

SetValuedMap SetValuedMap::parametric(int arg_dim, std::function<UpperSet(const Vec&)> eval,
                                      const PolyCone& cone) {
    SetValuedMap f(cone);
    f.arg_dim_ = arg_dim;
    f.parametric_ = std::move(eval);
    return f;
}

UpperSet SetValuedMap::value(const Vec& x) const {
    if (x.size() != arg_dim_) throw std::invalid_argument("SetValuedMap: argument dimension");
    if (parametric_) return parametric_(x);
    if (!domain_.contains(x)) return UpperSet::empty(cone_);
    std::vector<UpperSet> vals;
    for (const auto& p : pieces_) {
        if (p.Q.is_empty()) continue;
        vals.push_back(p.Q.translate(p.F * x + p.c));
    }
    return lattice_inf(vals, cone_);
}

const Polyhedron& SetValuedMap::domain() const {
    if (parametric_) throw std::logic_error("SetValuedMap: parametric map has no explicit domain");
    return domain_;
}

const std::vector<SetValuedMap::Piece>& SetValuedMap::pieces() const {
    if (parametric_) throw std::logic_error("SetValuedMap: parametric map has no pieces");
    return pieces_;
}

UpperSet S_of(const Vec& zstar, const PolyCone& cone) {
    if (zstar.lpNorm<1>() <= kGeomTol) throw std::invalid_argument("S_of: zstar must be nonzero");
    if (!cone.dual_contains(zstar))
        throw std::invalid_argument("S_of: zstar outside the dual cone");
    return from_hrep({{zstar, 0.0}}, cone);
}

UpperSet S_pair(const Vec& ystar, const Vec& zstar, const Vec& y, const PolyCone& cone) {
    if (ystar.size() != y.size()) throw std::invalid_argument("S_pair: y dimension mismatch");
    double level = ystar.dot(y);
    if (zstar.lpNorm<1>() <= kGeomTol)
        return level <= 0 ? UpperSet::full(cone) : UpperSet::empty(cone);
    if (!cone.dual_contains(zstar))
        throw std::invalid_argument("S_pair: nonzero zstar outside the dual cone");
    return from_hrep({{zstar, level}}, cone);
}

namespace {

void require_conjugable(const SetValuedMap& f, const Vec& zstar) {
    if (!f.is_affine() || f.arg_dim() < 0)
        throw std::invalid_argument("conjugate: map must be in affine-piece form");
    if (zstar.lpNorm<1>() <= kGeomTol || !f.cone().dual_contains(zstar))
        throw std::invalid_argument("conjugate: zstar must lie in C+ \\ {0}");
}

}  // namespace

UpperSet conjugate(const SetValuedMap& f, const Vec& xstar, const Vec& zstar) {
    require_conjugable(f, zstar);
    const PolyCone& cone = f.cone();
    if (!find_feasible(f.domain().E, f.domain().e)) return UpperSet::empty(cone);
    ExtReal beta = ExtReal::pos_inf();
    for (const auto& p : f.pieces()) {
        if (p.Q.is_empty()) continue;
        ExtReal suppQ = support(p.Q, zstar);
        if (suppQ.is_neg_inf()) return UpperSet::full(cone);
        LinearProgram lp;
        lp.c = p.F.transpose() * zstar - xstar;
        lp.M = f.domain().E;
        lp.r = f.domain().e;
        LPOutcome res = solve_lp(lp);
        if (res.status == LPStatus::UNBOUNDED) return UpperSet::full(cone);
        if (res.status != LPStatus::OPTIMAL)
            throw std::runtime_error("conjugate: LP failed on a feasible domain");
        beta = min(beta, ExtReal(res.optimal_value.value() + zstar.dot(p.c)) + suppQ);
    }
    if (beta.is_pos_inf()) return UpperSet::empty(cone);  // f has empty values throughout
    return from_hrep({{zstar, beta.value()}}, cone);
}

UpperSet biconjugate(const SetValuedMap& f, const Vec& x, const std::vector<Direction>& dirs) {
    if (dirs.empty()) throw std::invalid_argument("biconjugate: empty direction family");
    const PolyCone& cone = f.cone();
    std::vector<Halfspace> hs;
    for (const auto& d : dirs) {
        UpperSet conj = conjugate(f, d.xstar, d.zstar);
        if (conj.is_empty()) return UpperSet::empty(cone);
        if (conj.is_full()) continue;
        double beta = support(conj, d.zstar).value();
        hs.push_back({d.zstar, beta + d.xstar.dot(x)});
    }
    if (hs.empty()) return UpperSet::full(cone);
    return from_hrep(hs, cone);
}

std::vector<Vec> base_of(const PolyCone& Kplus, const Vec& z0) {
    std::vector<Vec> out;
    for (const auto& g : Kplus.generators()) {
        double t = g.dot(z0);
        if (t <= kGeomTol)
            throw std::invalid_argument("base_of: z0 is not strictly positive on the cone");
        out.push_back(g / t);
    }
    return out;
}

UpperSet base_conjugate(const SetValuedMap& f, const Vec& xstar, const Vec& z0) {
    if (!f.is_affine()) throw std::invalid_argument("base_conjugate: affine-piece form required");
    const PolyCone& cone = f.cone();
    base_of(dual_cone(cone), z0);  // admissibility check
    PolyVRep dom = enumerate_vrep(f.domain());
    if (dom.vertices.empty()) return UpperSet::empty(cone);
    std::vector<UpperSet> parts;
    for (const auto& p : f.pieces()) {
        if (p.Q.is_empty()) continue;
        if (p.Q.is_full()) return UpperSet::full(cone);
        std::vector<Vec> pts, rays = p.Q.rays();
        for (const auto& xv : dom.vertices) {
            Vec shift = p.F * xv + p.c - xstar.dot(xv) * z0;
            for (const auto& qv : p.Q.vertices()) pts.push_back(qv + shift);
        }
        for (const auto& xr : dom.rays) {
            Vec dir = p.F * xr - xstar.dot(xr) * z0;
            if (dir.lpNorm<1>() > kGeomTol) rays.push_back(dir);
        }
        parts.push_back(upper_close(pts, rays, cone));
    }
    return lattice_inf(parts, cone);
}

}  // namespace setlat
