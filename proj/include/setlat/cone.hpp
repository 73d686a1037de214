#ifndef SETLAT_CONE_HPP
#define SETLAT_CONE_HPP

#include <Eigen/Dense>
#include <vector>

namespace setlat {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Geometric comparison tolerance shared across the polyhedral calculus.
constexpr double kGeomTol = 1e-9;

/// Polyhedral convex cone given by generator rays (nonnegative combinations).
/// Always contains 0; generators are normalized to unit 1-norm and sorted.
class PolyCone {
  public:
    PolyCone(int ambient_dim, std::vector<Vec> generators);

    int dim() const { return dim_; }
    const std::vector<Vec>& generators() const { return gens_; }

    /// Generators of the positive dual cone {y : y.g >= 0 for all generators g},
    /// computed by double description. Cached after the first call.
    const std::vector<Vec>& dual_generators() const;

    /// Membership x in the cone, via the dual generators.
    bool contains(const Vec& x, double tol = kGeomTol) const;
    /// Membership y in the dual cone (inner products with generators).
    bool dual_contains(const Vec& y, double tol = kGeomTol) const;

    bool operator==(const PolyCone& o) const;

  private:
    int dim_;
    std::vector<Vec> gens_;
    mutable std::vector<Vec> dual_gens_;
    mutable bool dual_ready_ = false;
};

/// Normalize directions to unit 1-norm, sort lexicographically, dedupe.
std::vector<Vec> canonical_directions(std::vector<Vec> dirs);

/// The positive dual (polar) cone as a PolyCone.
PolyCone dual_cone(const PolyCone& K);

/// The nonnegative orthant of R^d.
PolyCone orthant(int d);

}  // namespace setlat

#endif
