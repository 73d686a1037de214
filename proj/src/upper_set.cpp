#include "setlat/upper_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "setlat/dd.hpp"

namespace setlat {

namespace {

bool lex_less(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a(i) < b(i) - 1e-12) return true;
        if (a(i) > b(i) + 1e-12) return false;
    }
    return false;
}

std::vector<Vec> sort_dedupe_points(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    std::vector<Vec> out;
    for (auto& p : pts) {
        if (!out.empty() && (out.back() - p).lpNorm<Eigen::Infinity>() <=
                                1e-9 * (1.0 + p.lpNorm<1>()))
            continue;
        out.push_back(p);
    }
    return out;
}

// H-rep of cl co(conv(points) + cone(rays)) via the homogenized dual cone.
// Assumes points nonempty. Returns true iff the set is not the whole space.
bool vrep_to_hrep(const std::vector<Vec>& points, const std::vector<Vec>& rays, int q,
                  std::vector<Halfspace>& out) {
    Mat M(static_cast<int>(points.size() + rays.size()), q + 1);
    int r = 0;
    for (const auto& v : points) {
        M.block(r, 0, 1, q) = v.transpose();
        M(r, q) = 1.0;
        ++r;
    }
    for (const auto& d : rays) {
        M.block(r, 0, 1, q) = d.transpose();
        M(r, q) = 0.0;
        ++r;
    }
    auto gens = dd::generator_directions(dd::cone_generators(M));
    out.clear();
    for (const auto& g : gens) {
        Vec a = g.head(q);
        double c = g(q);
        double na = a.lpNorm<1>();
        if (na <= 1e-9) continue;  // trivial 0 >= -c facet
        out.push_back({a / na, -c / na});
    }
    // dedupe, keeping the tightest offset per normal direction
    std::vector<Halfspace> uniq;
    for (auto& h : out) {
        bool merged = false;
        for (auto& u : uniq) {
            if ((u.normal - h.normal).lpNorm<Eigen::Infinity>() <= 1e-9) {
                u.offset = std::max(u.offset, h.offset);
                merged = true;
                break;
            }
        }
        if (!merged) uniq.push_back(h);
    }
    std::sort(uniq.begin(), uniq.end(),
              [](const Halfspace& x, const Halfspace& y) { return lex_less(x.normal, y.normal); });
    out = std::move(uniq);
    return !out.empty();
}

// V-rep of {z : a_k.z >= b_k} via the homogenization {(z,t) : a_k.z - b_k t >= 0, t >= 0}.
// Returns false when the polyhedron is empty.
bool hrep_to_vrep(const std::vector<Halfspace>& hs, int q, std::vector<Vec>& vertices,
                  std::vector<Vec>& rays) {
    Mat M(static_cast<int>(hs.size()) + 1, q + 1);
    for (size_t i = 0; i < hs.size(); ++i) {
        M.block(static_cast<int>(i), 0, 1, q) = hs[i].normal.transpose();
        M(static_cast<int>(i), q) = -hs[i].offset;
    }
    M.row(static_cast<int>(hs.size())).setZero();
    M(static_cast<int>(hs.size()), q) = 1.0;
    auto cg = dd::cone_generators(M);
    vertices.clear();
    rays.clear();
    for (const auto& l : cg.lineality) {  // t-component is forced to 0
        rays.push_back(l.head(q));
        rays.push_back(-l.head(q));
    }
    for (const auto& g : cg.rays) {
        double t = g(q);
        if (t > 1e-9)
            vertices.push_back(g.head(q) / t);
        else
            rays.push_back(g.head(q));
    }
    vertices = sort_dedupe_points(std::move(vertices));
    rays = canonical_directions(std::move(rays));
    return !vertices.empty();
}

}  // namespace

UpperSet UpperSet::empty(const PolyCone& cone) {
    UpperSet s(cone);
    s.tag_ = Tag::EMPTY;
    return s;
}

UpperSet UpperSet::full(const PolyCone& cone) {
    UpperSet s(cone);
    s.tag_ = Tag::FULL;
    return s;
}

const std::vector<Halfspace>& UpperSet::halfspaces() const { return halfspaces_; }

UpperSet UpperSet::translate(const Vec& t) const {
    if (t.size() != dim()) throw std::invalid_argument("translate: dimension mismatch");
    if (!is_proper()) return *this;
    UpperSet s(cone_);
    s.tag_ = Tag::PROPER;
    s.rays_ = rays_;
    for (const auto& v : vertices_) s.vertices_.push_back(v + t);
    for (const auto& h : halfspaces_) s.halfspaces_.push_back({h.normal, h.offset + h.normal.dot(t)});
    s.vertices_ = sort_dedupe_points(std::move(s.vertices_));
    return s;
}

UpperSet upper_close(const std::vector<Vec>& points, const std::vector<Vec>& rays,
                     const PolyCone& cone) {
    const int q = cone.dim();
    for (const auto& p : points)
        if (p.size() != q) throw std::invalid_argument("upper_close: point dimension mismatch");
    for (const auto& r : rays)
        if (r.size() != q) throw std::invalid_argument("upper_close: ray dimension mismatch");
    if (points.empty()) return UpperSet::empty(cone);

    std::vector<Vec> allrays = rays;
    for (const auto& g : cone.generators()) allrays.push_back(g);

    UpperSet s(cone);
    if (!vrep_to_hrep(points, allrays, q, s.halfspaces_)) return UpperSet::full(cone);
    if (!hrep_to_vrep(s.halfspaces_, q, s.vertices_, s.rays_))
        throw std::logic_error("upper_close: canonical round trip lost the set");
    // Snap the recomputed V-rep back onto the exact input data so repeated
    // canonicalization is bit-stable.
    for (auto& v : s.vertices_) {
        for (const auto& p : points) {
            if ((v - p).lpNorm<Eigen::Infinity>() <= 1e-9 * (1.0 + p.lpNorm<1>())) {
                v = p;
                break;
            }
        }
    }
    std::vector<Vec> cand = canonical_directions(allrays);
    for (auto& r : s.rays_) {
        for (const auto& c : cand) {
            if ((r - c).lpNorm<Eigen::Infinity>() <= 1e-9) {
                r = c;
                break;
            }
        }
    }
    s.vertices_ = sort_dedupe_points(std::move(s.vertices_));
    s.tag_ = UpperSet::Tag::PROPER;
    return s;
}

UpperSet from_hrep(const std::vector<Halfspace>& halfspaces, const PolyCone& cone) {
    const int q = cone.dim();
    if (halfspaces.empty()) return UpperSet::full(cone);
    for (const auto& h : halfspaces) {
        if (h.normal.size() != q) throw std::invalid_argument("from_hrep: dimension mismatch");
        if (!cone.dual_contains(h.normal))
            throw std::invalid_argument(
                "from_hrep: normal outside the dual cone; the set would not be upper closed");
    }
    UpperSet s(cone);
    std::vector<Vec> verts, rays;
    if (!hrep_to_vrep(halfspaces, q, verts, rays)) return UpperSet::empty(cone);
    // canonicalize through the V-rep so redundant inequalities drop out
    return upper_close(verts, rays, cone);
}

std::vector<Halfspace> to_hrep(const UpperSet& A) {
    if (A.is_empty()) throw std::invalid_argument("to_hrep: EMPTY has no H-rep");
    return A.halfspaces();
}

UpperSet lattice_inf(const std::vector<UpperSet>& sets) {
    bool dummy;
    return lattice_inf(sets, LatticeMode::G, &dummy);
}

UpperSet lattice_inf(const std::vector<UpperSet>& sets, LatticeMode mode, bool* hull_needed) {
    if (hull_needed) *hull_needed = false;
    if (sets.empty()) throw std::invalid_argument("lattice_inf: empty family needs a cone; use the caller convention");
    const PolyCone& cone = sets.front().cone();
    std::vector<Vec> pts, rays;
    bool any_proper = false;
    for (const auto& s : sets) {
        if (!(s.cone() == cone)) throw std::invalid_argument("lattice_inf: mixed cones");
        if (s.is_full()) return UpperSet::full(cone);
        if (s.is_empty()) continue;
        any_proper = true;
        pts.insert(pts.end(), s.vertices().begin(), s.vertices().end());
        rays.insert(rays.end(), s.rays().begin(), s.rays().end());
    }
    if (!any_proper) return UpperSet::empty(cone);
    UpperSet hull = upper_close(pts, rays, cone);
    if (mode == LatticeMode::F && hull_needed) {
        // witness search: midpoints of cross-member vertex pairs must lie in
        // some member for the union to be convex already
        std::vector<const UpperSet*> proper;
        for (const auto& s : sets)
            if (s.is_proper()) proper.push_back(&s);
        for (size_t i = 0; i < proper.size() && !*hull_needed; ++i)
            for (size_t j = i + 1; j < proper.size() && !*hull_needed; ++j)
                for (const auto& u : proper[i]->vertices())
                    for (const auto& v : proper[j]->vertices()) {
                        Vec mid = 0.5 * (u + v);
                        bool inside = false;
                        for (const auto* s : proper)
                            if (member(*s, mid)) { inside = true; break; }
                        if (!inside) { *hull_needed = true; break; }
                    }
    }
    return hull;
}

UpperSet lattice_sup(const std::vector<UpperSet>& sets) {
    if (sets.empty()) throw std::invalid_argument("lattice_sup: empty family needs a cone; use the caller convention");
    const PolyCone& cone = sets.front().cone();
    std::vector<Halfspace> hs;
    bool all_full = true;
    for (const auto& s : sets) {
        if (!(s.cone() == cone)) throw std::invalid_argument("lattice_sup: mixed cones");
        if (s.is_empty()) return UpperSet::empty(cone);
        if (s.is_full()) continue;
        all_full = false;
        hs.insert(hs.end(), s.halfspaces().begin(), s.halfspaces().end());
    }
    if (all_full) return UpperSet::full(cone);
    return from_hrep(hs, cone);
}

UpperSet lattice_inf(const std::vector<UpperSet>& sets, const PolyCone& cone) {
    if (sets.empty()) return UpperSet::empty(cone);
    return lattice_inf(sets);
}

UpperSet lattice_sup(const std::vector<UpperSet>& sets, const PolyCone& cone) {
    if (sets.empty()) return UpperSet::full(cone);
    return lattice_sup(sets);
}

UpperSet minkowski_add(const UpperSet& A, const UpperSet& B) {
    if (!(A.cone() == B.cone())) throw std::invalid_argument("minkowski_add: mixed cones");
    if (A.is_empty() || B.is_empty()) return UpperSet::empty(A.cone());
    if (A.is_full() || B.is_full()) return UpperSet::full(A.cone());
    std::vector<Vec> pts, rays;
    for (const auto& u : A.vertices())
        for (const auto& v : B.vertices()) pts.push_back(u + v);
    rays = A.rays();
    rays.insert(rays.end(), B.rays().begin(), B.rays().end());
    return upper_close(pts, rays, A.cone());
}

UpperSet scale(double t, const UpperSet& A) {
    if (t < 0) throw std::invalid_argument("scale: negative factor");
    if (t == 0.0) {
        // 0*A = cl C by convention, for every A including EMPTY and FULL
        std::vector<Vec> origin{Vec::Zero(A.dim())};
        return upper_close(origin, {}, A.cone());
    }
    if (!A.is_proper()) return A;
    std::vector<Vec> pts;
    for (const auto& v : A.vertices()) pts.push_back(t * v);
    return upper_close(pts, A.rays(), A.cone());
}

bool contains(const UpperSet& A, const UpperSet& B, double tol) {
    if (!(A.cone() == B.cone())) throw std::invalid_argument("contains: mixed cones");
    if (B.is_empty() || A.is_full()) return true;
    if (A.is_empty() || B.is_full()) return false;
    for (const auto& h : A.halfspaces()) {
        for (const auto& v : B.vertices())
            if (h.normal.dot(v) < h.offset - tol * (1.0 + std::abs(h.offset) + v.lpNorm<1>()))
                return false;
        for (const auto& r : B.rays())
            if (h.normal.dot(r) < -tol) return false;
    }
    return true;
}

bool set_equal(const UpperSet& A, const UpperSet& B, double tol) {
    return contains(A, B, tol) && contains(B, A, tol);
}

ExtReal support(const UpperSet& A, const Vec& zstar) {
    if (A.is_empty()) return ExtReal::pos_inf();
    if (A.is_full()) return zstar.lpNorm<1>() <= kGeomTol ? ExtReal(0.0) : ExtReal::neg_inf();
    for (const auto& r : A.rays())
        if (zstar.dot(r) < -kGeomTol * (1.0 + zstar.lpNorm<1>())) return ExtReal::neg_inf();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : A.vertices()) best = std::min(best, zstar.dot(v));
    return ExtReal(best);
}

bool member(const UpperSet& A, const Vec& z, double tol) {
    if (A.is_empty()) return false;
    if (A.is_full()) return true;
    for (const auto& h : A.halfspaces())
        if (h.normal.dot(z) < h.offset - tol * (1.0 + std::abs(h.offset) + z.lpNorm<1>()))
            return false;
    return true;
}

}  // namespace setlat
