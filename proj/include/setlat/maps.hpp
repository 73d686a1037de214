#ifndef SETLAT_MAPS_HPP
#define SETLAT_MAPS_HPP

#include <functional>
#include <vector>

#include "setlat/upper_set.hpp"

namespace setlat {

/// {x : E x <= e}. E may have zero rows (the whole space).
struct Polyhedron {
    Mat E;
    Vec e;
    int dim() const { return static_cast<int>(E.cols()); }
    bool contains(const Vec& x, double tol = kGeomTol) const;
    static Polyhedron whole_space(int n);
    static Polyhedron box(int n, double lo, double hi);
};

/// V-rep (vertices, rays) of a polyhedron via double description.
/// Empty vertex list means the polyhedron is empty.
struct PolyVRep {
    std::vector<Vec> vertices;
    std::vector<Vec> rays;
};
PolyVRep enumerate_vrep(const Polyhedron& P);

/// A polyhedral set-valued function x -> value(x) in G(C).
/// Affine-piece form: value(x) = inf_i ({F_i x + c_i} + Q_i) on the domain,
/// EMPTY outside. A parametric evaluator covers non-affine maps; those
/// support evaluation only.
class SetValuedMap {
  public:
    struct Piece {
        Mat F;
        Vec c;
        UpperSet Q;
        Piece(Mat F_, Vec c_, UpperSet Q_) : F(std::move(F_)), c(std::move(c_)), Q(std::move(Q_)) {}
    };

    static SetValuedMap affine(Polyhedron domain, std::vector<Piece> pieces, const PolyCone& cone,
                               bool declared_convex = true);
    static SetValuedMap parametric(int arg_dim, std::function<UpperSet(const Vec&)> eval,
                                   const PolyCone& cone);

    UpperSet value(const Vec& x) const;

    bool is_affine() const { return !pieces_.empty() || !parametric_; }
    bool declared_convex() const { return convex_; }
    int arg_dim() const { return arg_dim_; }
    const PolyCone& cone() const { return cone_; }
    const Polyhedron& domain() const;
    const std::vector<Piece>& pieces() const;

  private:
    explicit SetValuedMap(const PolyCone& cone) : cone_(cone) {}
    int arg_dim_ = 0;
    PolyCone cone_;
    Polyhedron domain_;
    std::vector<Piece> pieces_;
    std::function<UpperSet(const Vec&)> parametric_;
    bool convex_ = false;
};

/// The pair (y*, z*) with z* in C+ \ {0}.
struct DualPair {
    Vec ystar;
    Vec zstar;
};

/// S(z*) = {z : 0 <= z*.z} as an upper set; z* must be in C+ \ {0}.
UpperSet S_of(const Vec& zstar, const PolyCone& cone);

/// S_{(y*,z*)}(y) = {z : y*.y <= z*.z}; degenerate z* = 0 yields FULL or EMPTY.
UpperSet S_pair(const Vec& ystar, const Vec& zstar, const Vec& y, const PolyCone& cone);

/// -f*(x*, z*) = cl U_x [f(x) + S_{(x*,z*)}(-x)], computed as the half space
/// {z : beta <= z*.z} with beta = inf_x [phi_{f,z*}(x) - x*.x].
UpperSet conjugate(const SetValuedMap& f, const Vec& xstar, const Vec& zstar);

/// Intersection of Young-Fenchel half spaces over a finite direction family.
struct Direction {
    Vec xstar;
    Vec zstar;
};
UpperSet biconjugate(const SetValuedMap& f, const Vec& x, const std::vector<Direction>& dirs);

/// Extreme points of the base B(z0) = {z* in C+ : z*.z0 = 1}.
std::vector<Vec> base_of(const PolyCone& Kplus, const Vec& z0);

/// -f*_{z0}(x*) = cl co U_x [f(x) - (x*.x) z0], by a polyhedral sweep of the
/// domain's V-rep.
UpperSet base_conjugate(const SetValuedMap& f, const Vec& xstar, const Vec& z0);

}  // namespace setlat

#endif
