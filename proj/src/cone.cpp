#include "setlat/cone.hpp"

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

}  // namespace

std::vector<Vec> canonical_directions(std::vector<Vec> dirs) {
    for (auto& v : dirs) {
        double n1 = v.lpNorm<1>();
        if (n1 > 0) v /= n1;
    }
    std::sort(dirs.begin(), dirs.end(), lex_less);
    std::vector<Vec> out;
    for (auto& v : dirs) {
        if (!out.empty() && (out.back() - v).lpNorm<Eigen::Infinity>() <= 1e-9) continue;
        out.push_back(v);
    }
    return out;
}

PolyCone::PolyCone(int ambient_dim, std::vector<Vec> generators) : dim_(ambient_dim) {
    for (const auto& g : generators) {
        if (g.size() != dim_) throw std::invalid_argument("PolyCone: generator dimension mismatch");
        if (g.lpNorm<1>() <= kGeomTol) throw std::invalid_argument("PolyCone: zero generator");
    }
    gens_ = canonical_directions(std::move(generators));
}

const std::vector<Vec>& PolyCone::dual_generators() const {
    if (!dual_ready_) {
        Mat M(static_cast<int>(gens_.size()), dim_);
        for (size_t i = 0; i < gens_.size(); ++i) M.row(static_cast<int>(i)) = gens_[i].transpose();
        dual_gens_ = dd::generator_directions(dd::cone_generators(M));
        dual_ready_ = true;
    }
    return dual_gens_;
}

bool PolyCone::contains(const Vec& x, double tol) const {
    if (x.size() != dim_) return false;
    for (const auto& y : dual_generators())
        if (y.dot(x) < -tol * (1.0 + x.lpNorm<1>())) return false;
    return true;
}

bool PolyCone::dual_contains(const Vec& y, double tol) const {
    if (y.size() != dim_) return false;
    for (const auto& g : gens_)
        if (y.dot(g) < -tol * (1.0 + y.lpNorm<1>())) return false;
    return true;
}

bool PolyCone::operator==(const PolyCone& o) const {
    if (dim_ != o.dim_) return false;
    for (const auto& g : gens_)
        if (!o.contains(g)) return false;
    for (const auto& g : o.gens_)
        if (!contains(g)) return false;
    return true;
}

PolyCone dual_cone(const PolyCone& K) {
    std::vector<Vec> gens;
    for (const auto& g : K.dual_generators())
        if (g.lpNorm<1>() > kGeomTol) gens.push_back(g);
    if (gens.empty()) {
        // Dual of the whole space is {0}; not representable with nonzero
        // generators, so reject (never needed at this scale).
        throw std::invalid_argument("dual_cone: dual cone is {0}");
    }
    return PolyCone(K.dim(), gens);
}

PolyCone orthant(int d) {
    std::vector<Vec> gens;
    for (int i = 0; i < d; ++i) gens.push_back(Vec::Unit(d, i));
    return PolyCone(d, gens);
}

}  // namespace setlat
