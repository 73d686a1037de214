#ifndef SETLAT_UPPER_SET_HPP
#define SETLAT_UPPER_SET_HPP

#include <optional>
#include <vector>

#include "setlat/cone.hpp"
#include "setlat/ext_real.hpp"

namespace setlat {

/// One inequality {z : offset <= normal.z}.
struct Halfspace {
    Vec normal;
    double offset;
};

/// An upper closed convex set A = cl co(A + C) over a polyhedral cone C,
/// with EMPTY and FULL sentinels. PROPER sets carry a canonical V-rep
/// (irredundant vertices + unit rays, recession includes C) and the
/// matching H-rep (normals in the dual cone of C).
class UpperSet {
  public:
    enum class Tag { EMPTY, FULL, PROPER };

    static UpperSet empty(const PolyCone& cone);
    static UpperSet full(const PolyCone& cone);

    Tag tag() const { return tag_; }
    bool is_empty() const { return tag_ == Tag::EMPTY; }
    bool is_full() const { return tag_ == Tag::FULL; }
    bool is_proper() const { return tag_ == Tag::PROPER; }

    const PolyCone& cone() const { return cone_; }
    int dim() const { return cone_.dim(); }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Vec>& rays() const { return rays_; }
    const std::vector<Halfspace>& halfspaces() const;

    /// Elementwise translation A + {t}.
    UpperSet translate(const Vec& t) const;

    friend UpperSet upper_close(const std::vector<Vec>& points, const std::vector<Vec>& rays,
                                const PolyCone& cone);
    friend UpperSet from_hrep(const std::vector<Halfspace>& halfspaces, const PolyCone& cone);

  private:
    explicit UpperSet(const PolyCone& cone) : cone_(cone) {}
    Tag tag_ = Tag::EMPTY;
    PolyCone cone_;
    std::vector<Vec> vertices_;
    std::vector<Vec> rays_;
    std::vector<Halfspace> halfspaces_;
};

/// cl co(conv(points) + cone(rays) + C). Empty point list yields EMPTY.
UpperSet upper_close(const std::vector<Vec>& points, const std::vector<Vec>& rays,
                     const PolyCone& cone);

/// Intersection of the given halfspaces, which must all have normals in the
/// dual cone of C (rejected otherwise). Empty list yields FULL.
UpperSet from_hrep(const std::vector<Halfspace>& halfspaces, const PolyCone& cone);

std::vector<Halfspace> to_hrep(const UpperSet& A);

enum class LatticeMode { F, G };

/// Infimum cl co U of a family (G mode); empty family yields EMPTY.
UpperSet lattice_inf(const std::vector<UpperSet>& sets);
/// F-mode infimum: when the union is not convex this cannot be represented
/// here; `hull_needed` is set and the G-mode value returned.
UpperSet lattice_inf(const std::vector<UpperSet>& sets, LatticeMode mode, bool* hull_needed);

/// Supremum (intersection); empty family yields FULL.
UpperSet lattice_sup(const std::vector<UpperSet>& sets);

/// Overloads carrying the cone so the empty-family conventions
/// (inf over {} = EMPTY, sup over {} = FULL) are representable.
UpperSet lattice_inf(const std::vector<UpperSet>& sets, const PolyCone& cone);
UpperSet lattice_sup(const std::vector<UpperSet>& sets, const PolyCone& cone);

/// cl(A + B) with the empty-set-absorbs convention.
UpperSet minkowski_add(const UpperSet& A, const UpperSet& B);

/// t*A for t > 0; cl C for t = 0 (regardless of A); EMPTY for t > 0, A empty.
UpperSet scale(double t, const UpperSet& A);

/// A contains B within the geometric tolerance.
bool contains(const UpperSet& A, const UpperSet& B, double tol = kGeomTol);
bool set_equal(const UpperSet& A, const UpperSet& B, double tol = kGeomTol);

/// inf_{z in A} zstar.z as an extended real.
ExtReal support(const UpperSet& A, const Vec& zstar);

/// Membership of a point, via the H-rep.
bool member(const UpperSet& A, const Vec& z, double tol = kGeomTol);

}  // namespace setlat

#endif
