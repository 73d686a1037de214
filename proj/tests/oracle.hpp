#ifndef SETLAT_TESTS_ORACLE_HPP
#define SETLAT_TESTS_ORACLE_HPP

// Brute-force polyhedral oracles and random-instance generators used by the
// test suites. Everything here works by exhaustive subset enumeration, so it
// is independent of the incremental double-description code under test.

#include <random>
#include <vector>

#include "setlat/examples.hpp"
#include "setlat/lp.hpp"
#include "setlat/solutions.hpp"

namespace oracle {

using setlat::DualPair;
using setlat::Halfspace;
using setlat::Mat;
using setlat::PolyCone;
using setlat::ProblemInstance;
using setlat::SetValuedMap;
using setlat::UpperSet;
using setlat::Vec;

constexpr double kTol = 1e-9;

inline std::vector<Vec> dedupe_dirs(std::vector<Vec> dirs) {
    std::vector<Vec> out;
    for (auto& v : dirs) {
        double n = v.lpNorm<1>();
        if (n <= kTol) continue;
        v /= n;
        bool seen = false;
        for (const auto& w : out)
            if ((w - v).lpNorm<1>() <= 1e-7) seen = true;
        if (!seen) out.push_back(v);
    }
    return out;
}

/// Outer normals n of cone(gens) in R^d (n.g >= 0 for all gens), found by
/// rank-(d-1) subsets. Assumes the cone is full-dimensional.
inline std::vector<Vec> cone_facets(const std::vector<Vec>& gens, int d) {
    std::vector<Vec> normals;
    const int m = static_cast<int>(gens.size());
    if (d == 1) {
        bool pos = false, neg = false;
        for (const auto& g : gens) {
            if (g(0) > kTol) pos = true;
            if (g(0) < -kTol) neg = true;
        }
        if (!neg) normals.push_back(Vec::Constant(1, 1.0));
        if (!pos) normals.push_back(Vec::Constant(1, -1.0));
        return dedupe_dirs(normals);
    }
    std::vector<int> idx(d - 1);
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + std::min(d - 1, m), true);
    std::sort(mask.begin(), mask.end());
    do {
        Mat S(d - 1, d);
        int r = 0;
        for (int i = 0; i < m; ++i)
            if (mask[i]) S.row(r++) = gens[i].transpose();
        if (r < d - 1) continue;
        Eigen::JacobiSVD<Mat> svd(S, Eigen::ComputeFullV);
        if (d - 1 > 0 && svd.rank() != d - 1) continue;
        Vec n = svd.matrixV().col(d - 1);
        bool pos = false, neg = false;
        for (const auto& g : gens) {
            double s = n.dot(g);
            if (s > kTol) pos = true;
            if (s < -kTol) neg = true;
        }
        if (!neg) normals.push_back(n);
        if (!pos) normals.push_back(-n);
    } while (std::next_permutation(mask.begin(), mask.end()));
    return dedupe_dirs(normals);
}

/// H-rep of conv(points) + cone(rays) in R^d by homogenization. An empty
/// result means the whole space.
inline std::vector<Halfspace> hull_hrep(const std::vector<Vec>& points,
                                        const std::vector<Vec>& rays, int d) {
    std::vector<Vec> gens;
    for (const auto& p : points) {
        Vec g(d + 1);
        g.head(d) = p;
        g(d) = 1.0;
        gens.push_back(g);
    }
    for (const auto& r : rays) {
        Vec g(d + 1);
        g.head(d) = r;
        g(d) = 0.0;
        gens.push_back(g);
    }
    std::vector<Halfspace> hs;
    for (const auto& n : cone_facets(gens, d + 1)) {
        Vec a = n.head(d);
        if (a.lpNorm<1>() <= 1e-7) continue;  // the t >= 0 style facet
        hs.push_back({a / a.lpNorm<1>(), -n(d) / a.lpNorm<1>()});
    }
    return hs;
}

struct VRep {
    std::vector<Vec> vertices;
    std::vector<Vec> rays;
};

/// V-rep of {z : h.normal . z >= h.offset for all h} by subset enumeration.
inline VRep hrep_vrep(const std::vector<Halfspace>& hs, int d) {
    VRep out;
    const int m = static_cast<int>(hs.size());
    auto feasible_pt = [&](const Vec& z) {
        for (const auto& h : hs)
            if (h.normal.dot(z) < h.offset - 1e-7 * (1.0 + std::abs(h.offset) + z.lpNorm<1>()))
                return false;
        return true;
    };
    // vertices: all d-subsets with invertible normal matrix
    std::vector<bool> mask(m, false);
    if (m >= d) {
        std::fill(mask.end() - d, mask.end(), true);
        std::sort(mask.begin(), mask.end());
        do {
            Mat A(d, d);
            Vec b(d);
            int r = 0;
            for (int i = 0; i < m; ++i)
                if (mask[i]) {
                    A.row(r) = hs[i].normal.transpose();
                    b(r++) = hs[i].offset;
                }
            Eigen::FullPivLU<Mat> lu(A);
            if (lu.rank() != d) continue;
            Vec z = lu.solve(b);
            if (feasible_pt(z)) out.vertices.push_back(z);
        } while (std::next_permutation(mask.begin(), mask.end()));
    }
    // rays: all (d-1)-subsets of the homogeneous system
    auto ray_ok = [&](const Vec& rdir) {
        for (const auto& h : hs)
            if (h.normal.dot(rdir) < -1e-7) return false;
        return true;
    };
    std::vector<bool> rmask(m, false);
    if (d - 1 <= m) {
        std::fill(rmask.end() - (d - 1), rmask.end(), true);
        std::sort(rmask.begin(), rmask.end());
        do {
            Mat A(std::max(d - 1, 1), d);
            A.setZero();
            int r = 0;
            for (int i = 0; i < m; ++i)
                if (rmask[i]) A.row(r++) = hs[i].normal.transpose();
            Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV);
            if (svd.rank() != d - 1) continue;
            Vec rd = svd.matrixV().col(d - 1);
            if (ray_ok(rd)) out.rays.push_back(rd);
            if (ray_ok(-rd)) out.rays.push_back(-rd);
        } while (std::next_permutation(rmask.begin(), rmask.end()));
    }
    // dedupe vertices
    std::vector<Vec> vu;
    for (const auto& v : out.vertices) {
        bool seen = false;
        for (const auto& w : vu)
            if ((w - v).lpNorm<1>() <= 1e-6 * (1.0 + v.lpNorm<1>())) seen = true;
        if (!seen) vu.push_back(v);
    }
    out.vertices = std::move(vu);
    out.rays = dedupe_dirs(out.rays);
    return out;
}

/// inf of z*.z over conv(points) + cone(rays): -inf on a descending ray.
inline setlat::ExtReal vrep_support(const std::vector<Vec>& points, const std::vector<Vec>& rays,
                                    const Vec& zstar) {
    if (points.empty()) return setlat::ExtReal::pos_inf();
    for (const auto& r : rays)
        if (zstar.dot(r) < -1e-9 * (1.0 + zstar.lpNorm<1>())) return setlat::ExtReal::neg_inf();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : points) best = std::min(best, zstar.dot(p));
    return setlat::ExtReal(best);
}

inline setlat::ExtReal upper_support_oracle(const UpperSet& A, const Vec& zstar) {
    if (A.is_empty()) return setlat::ExtReal::pos_inf();
    if (A.is_full())
        return zstar.lpNorm<1>() <= 1e-9 ? setlat::ExtReal(0.0) : setlat::ExtReal::neg_inf();
    return vrep_support(A.vertices(), A.rays(), zstar);
}

// -------- random generators --------

inline Vec random_vec(std::mt19937& rng, int d, double scale = 2.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Vec v(d);
    for (int i = 0; i < d; ++i) v(i) = u(rng);
    return v;
}

inline PolyCone random_cone(std::mt19937& rng, int d) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (u(rng) < 0.5) return setlat::orthant(d);
    // perturbed orthant: full-dimensional, pointed, proper dual cone
    std::vector<Vec> gens;
    for (int i = 0; i < d; ++i) {
        Vec g = Vec::Unit(d, i);
        for (int k = 0; k < d; ++k) g(k) += 0.25 * u(rng);
        gens.push_back(g);
    }
    return PolyCone(d, gens);
}

inline UpperSet random_upper(std::mt19937& rng, const PolyCone& C, int max_pts = 4) {
    std::uniform_int_distribution<int> np(1, max_pts);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Vec> pts, rays;
    int n = np(rng);
    for (int i = 0; i < n; ++i) pts.push_back(random_vec(rng, C.dim()));
    if (u(rng) < 0.3) {
        // an extra recession direction from inside the cone
        Vec r = Vec::Zero(C.dim());
        for (const auto& g : C.generators()) r += u(rng) * g;
        if (r.lpNorm<1>() > 1e-6) rays.push_back(r);
    }
    return upper_close(pts, rays, C);
}

/// Random bounded convex instance with a built-in Slater point at x = 0:
/// dom f is a box, D = R^m_+, and g(0) = {c_g} + R^m_+ with c_g < 0 strictly.
inline ProblemInstance random_instance(std::mt19937& rng, int n, int m, int q,
                                       bool multi_piece = false) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    PolyCone C = setlat::orthant(q);
    PolyCone D = setlat::orthant(m);
    std::vector<SetValuedMap::Piece> pieces;
    int npieces = multi_piece && u(rng) < 0.5 ? 2 : 1;
    for (int i = 0; i < npieces; ++i) {
        Mat F(q, n);
        for (int r = 0; r < q; ++r) F.row(r) = random_vec(rng, n).transpose();
        Vec c = random_vec(rng, q);
        std::vector<Vec> qpts;
        int npts = 1 + static_cast<int>(u(rng) * 2);
        for (int k = 0; k < npts; ++k) qpts.push_back(random_vec(rng, q, 1.0));
        pieces.emplace_back(F, c, upper_close(qpts, {}, C));
    }
    SetValuedMap f = SetValuedMap::affine(setlat::Polyhedron::box(n, -1.0, 1.0), std::move(pieces),
                                          C, npieces == 1);
    Mat G(m, n);
    for (int r = 0; r < m; ++r) G.row(r) = random_vec(rng, n).transpose();
    Vec cg(m);
    for (int r = 0; r < m; ++r) cg(r) = -0.2 - u(rng);  // strictly interior to -D
    UpperSet Qg = upper_close({Vec::Zero(m)}, {}, D);
    SetValuedMap g =
        SetValuedMap::affine(setlat::Polyhedron::whole_space(n), {{G, cg, Qg}}, D);
    return setlat::make_instance(std::move(f), std::move(g));
}

inline Vec random_dual_dir(std::mt19937& rng, const PolyCone& dual_of, double lo = 0.05) {
    std::uniform_real_distribution<double> u(lo, 1.0);
    Vec z = Vec::Zero(dual_of.dim());
    PolyCone plus = setlat::dual_cone(dual_of);
    for (const auto& g : plus.generators()) z += u(rng) * g;
    return z;
}

}  // namespace oracle

#endif
