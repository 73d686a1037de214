#include "setlat/dd.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <stdexcept>

namespace setlat::dd {

namespace {

constexpr double kZeroTol = 1e-9;
constexpr double kRankTol = 1e-8;

// Orthonormal basis of the null space of M (columns), via SVD.
Mat null_space(const Mat& M, int dim) {
    if (M.rows() == 0) return Mat::Identity(dim, dim);
    Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double scale = sv.size() > 0 ? sv(0) : 0.0;
    double tol = kRankTol * std::max(1.0, scale);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol) ++r;
    return svd.matrixV().rightCols(dim - r);
}

}  // namespace

ConeGenerators cone_generators(const Mat& M) {
    const int d = static_cast<int>(M.cols());
    ConeGenerators out;

    // Lineality space {x : Mx = 0}.
    Mat L = null_space(M, d);
    for (int j = 0; j < L.cols(); ++j) out.lineality.push_back(L.col(j));
    const int dp = d - static_cast<int>(L.cols());
    if (dp == 0) return out;

    // Pointed part lives in the complement of the lineality space.
    Mat B;  // d x dp, orthonormal
    {
        Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
        B = svd.matrixV().leftCols(dp);
    }
    Mat Mp = M * B;  // m x dp, full column rank, so the projected cone is pointed

    // Normalized, deduplicated rows of the projected system.
    std::vector<Vec> rows;
    for (int i = 0; i < Mp.rows(); ++i) {
        Vec v = Mp.row(i).transpose();
        double n = v.norm();
        if (n <= kZeroTol) continue;
        v /= n;
        bool dup = false;
        for (const auto& u : rows)
            if ((u - v).lpNorm<Eigen::Infinity>() <= 1e-12) { dup = true; break; }
        if (!dup) rows.push_back(v);
    }

    auto feasible = [&](const Vec& y) {
        for (const auto& r : rows)
            if (r.dot(y) < -kZeroTol) return false;
        return true;
    };
    std::vector<Vec> rays;
    auto push_ray = [&](const Vec& y) {
        for (const auto& u : rays)
            if ((u - y).lpNorm<Eigen::Infinity>() <= 1e-9) return;
        rays.push_back(y);
    };

    if (dp == 1) {
        Vec y = Vec::Ones(1);
        if (feasible(y)) push_ray(y);
        if (feasible(-y)) push_ray(-y);
    } else {
        // Every extreme ray of a pointed dp-dimensional cone lies on dp - 1
        // independent active constraints; enumerate all (dp - 1)-subsets.
        const int k = dp - 1;
        const int nrows = static_cast<int>(rows.size());
        std::vector<int> idx(k);
        for (int j = 0; j < k; ++j) idx[j] = j;
        while (nrows >= k) {
            Mat S(k, dp);
            for (int j = 0; j < k; ++j) S.row(j) = rows[idx[j]].transpose();
            Eigen::JacobiSVD<Mat> svd(S, Eigen::ComputeFullV);
            const auto& sv = svd.singularValues();
            double tol = kRankTol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
            int rank = 0;
            for (int i = 0; i < sv.size(); ++i)
                if (sv(i) > tol) ++rank;
            if (rank == k) {  // unique null direction up to sign
                Vec y = svd.matrixV().col(dp - 1);
                if (feasible(y)) push_ray(y);
                if (feasible(-y)) push_ray(-y);
            }
            // next combination
            int j = k - 1;
            while (j >= 0 && idx[j] == nrows - k + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
        }
    }

    for (const auto& y : rays) out.rays.push_back(B * y);
    return out;
}

std::vector<Vec> generator_directions(const ConeGenerators& g) {
    std::vector<Vec> out;
    for (const auto& l : g.lineality) {
        out.push_back(l);
        out.push_back(-l);
    }
    for (const auto& r : g.rays) out.push_back(r);
    return out;
}

}  // namespace setlat::dd
