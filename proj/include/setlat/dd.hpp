#ifndef SETLAT_DD_HPP
#define SETLAT_DD_HPP

#include <Eigen/Dense>
#include <vector>

namespace setlat::dd {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Generator description of a polyhedral cone {x : M x >= 0}.
/// The cone equals span(lineality) + cone(rays); rays live in the
/// orthogonal complement of the lineality space and are unit vectors.
struct ConeGenerators {
    std::vector<Vec> lineality;
    std::vector<Vec> rays;
    bool empty() const { return lineality.empty() && rays.empty(); }
};

/// Extreme-ray enumeration by incremental halfspace insertion.
/// M has one row per inequality m_i^T x >= 0.
ConeGenerators cone_generators(const Mat& M);

/// All generators as plain directions: +-lineality basis followed by rays.
std::vector<Vec> generator_directions(const ConeGenerators& g);

}  // namespace setlat::dd

#endif
