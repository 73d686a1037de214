#include "setlat/lp.hpp"

#include <Eigen/LU>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace setlat {

namespace {

// Revised simplex with Bland's rule on the equality form
//   A x = b, x >= 0, b >= 0 (rows pre-flipped), min c.x.
// Refactorizes the basis every iteration; fine at desk scale.
struct Simplex {
    Mat A;
    Vec b;
    Vec c;
    int m, n;
    std::vector<int> basis;
    int artificial_begin;  // columns >= this are artificials

    Eigen::PartialPivLU<Mat> factor() const {
        Mat B(m, m);
        for (int i = 0; i < m; ++i) B.col(i) = A.col(basis[i]);
        return Eigen::PartialPivLU<Mat>(B);
    }

    // Returns OPTIMAL or UNBOUNDED; throws on iteration blowup.
    LPStatus run(bool phase2) {
        const int max_iter = 20000;
        for (int iter = 0; iter < max_iter; ++iter) {
            auto lu = factor();
            Vec xB = lu.solve(b);
            Vec cB(m);
            for (int i = 0; i < m; ++i) cB(i) = c(basis[i]);
            Vec y = lu.transpose().solve(cB);
            // Bland: smallest-index entering column with negative reduced cost
            int enter = -1;
            for (int j = 0; j < n; ++j) {
                if (phase2 && j >= artificial_begin) continue;  // artificials never re-enter
                bool basic = false;
                for (int i = 0; i < m; ++i)
                    if (basis[i] == j) { basic = true; break; }
                if (basic) continue;
                double red = c(j) - y.dot(A.col(j));
                if (red < -kLpTol) { enter = j; break; }
            }
            if (enter < 0) return LPStatus::OPTIMAL;
            Vec d = lu.solve(A.col(enter));
            // ratio test; rows holding a basic artificial at zero also block
            int leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                bool art_at_zero = phase2 && basis[i] >= artificial_begin && xB(i) <= kLpTol;
                double di = d(i);
                double ratio;
                if (di > kLpTol)
                    ratio = std::max(0.0, xB(i)) / di;
                else if (art_at_zero && std::abs(di) > kLpTol)
                    ratio = 0.0;
                else
                    continue;
                if (ratio < best - 1e-12 ||
                    (ratio < best + 1e-12 && (leave < 0 || basis[i] < basis[leave]))) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return LPStatus::UNBOUNDED;
            basis[leave] = enter;
        }
        return LPStatus::NUMERICAL_FAILURE;
    }
};

struct Prepared {
    Simplex sx;
    std::vector<double> row_sign;
    int n_orig;
    int m_rows;  // rows of the user's M (before bound rows)
};

// Equality form: columns are [u(n) | w(n) | slack(m)] + artificials(m).
Prepared prepare(const Vec& c, const Mat& M, const Vec& r) {
    const int n = static_cast<int>(c.size());
    const int m = static_cast<int>(M.rows());
    Prepared p;
    p.n_orig = n;
    p.m_rows = m;
    p.row_sign.assign(m, 1.0);
    Simplex& sx = p.sx;
    sx.m = m;
    sx.n = 2 * n + m + m;
    sx.artificial_begin = 2 * n + m;
    sx.A = Mat::Zero(m, sx.n);
    sx.b = Vec::Zero(m);
    sx.c = Vec::Zero(sx.n);
    for (int i = 0; i < m; ++i) {
        double s = r(i) < 0 ? -1.0 : 1.0;
        p.row_sign[i] = s;
        sx.A.block(i, 0, 1, n) = s * M.row(i);
        sx.A.block(i, n, 1, n) = -s * M.row(i);
        sx.A(i, 2 * n + i) = s;                 // slack
        sx.A(i, sx.artificial_begin + i) = 1.0; // artificial
        sx.b(i) = s * r(i);
    }
    sx.basis.resize(m);
    for (int i = 0; i < m; ++i) sx.basis[i] = sx.artificial_begin + i;
    return p;
}

LPOutcome solve_rows(const Vec& c, const Mat& M, const Vec& r, int report_rows) {
    const int n = static_cast<int>(c.size());
    const int m = static_cast<int>(M.rows());
    LPOutcome out;
    if (m == 0) {
        // unconstrained: bounded only when c = 0
        if (c.lpNorm<1>() <= kLpTol) {
            out.status = LPStatus::OPTIMAL;
            out.optimal_value = ExtReal(0.0);
            out.primal_point = Vec::Zero(n);
            out.multipliers = Vec::Zero(0);
        } else {
            out.status = LPStatus::UNBOUNDED;
            out.optimal_value = ExtReal::neg_inf();
        }
        return out;
    }
    Prepared p = prepare(c, M, r);
    Simplex& sx = p.sx;
    // phase 1
    for (int i = 0; i < m; ++i) sx.c(sx.artificial_begin + i) = 1.0;
    LPStatus st = sx.run(false);
    if (st != LPStatus::OPTIMAL) {
        out.status = LPStatus::NUMERICAL_FAILURE;
        return out;
    }
    {
        auto lu = sx.factor();
        Vec xB = lu.solve(sx.b);
        double infeas = 0.0;
        for (int i = 0; i < sx.m; ++i)
            if (sx.basis[i] >= sx.artificial_begin) infeas += std::max(0.0, xB(i));
        if (infeas > 1e-7) {
            out.status = LPStatus::INFEASIBLE;
            out.optimal_value = ExtReal::pos_inf();
            return out;
        }
    }
    // phase 2
    sx.c.setZero();
    for (int j = 0; j < n; ++j) {
        sx.c(j) = c(j);
        sx.c(n + j) = -c(j);
    }
    st = sx.run(true);
    if (st == LPStatus::UNBOUNDED) {
        out.status = LPStatus::UNBOUNDED;
        out.optimal_value = ExtReal::neg_inf();
        return out;
    }
    if (st != LPStatus::OPTIMAL) {
        out.status = LPStatus::NUMERICAL_FAILURE;
        return out;
    }
    auto lu = sx.factor();
    Vec xB = lu.solve(sx.b);
    Vec x = Vec::Zero(n);
    for (int i = 0; i < sx.m; ++i) {
        int j = sx.basis[i];
        if (j < n)
            x(j) += xB(i);
        else if (j < 2 * n)
            x(j - n) -= xB(i);
    }
    Vec cB(sx.m);
    for (int i = 0; i < sx.m; ++i) cB(i) = sx.c(sx.basis[i]);
    Vec y = lu.transpose().solve(cB);
    Vec mu(report_rows);
    for (int i = 0; i < report_rows; ++i) mu(i) = std::max(0.0, -p.row_sign[i] * y(i));
    out.status = LPStatus::OPTIMAL;
    out.primal_point = x;
    out.optimal_value = ExtReal(c.dot(x));
    out.multipliers = mu;
    return out;
}

}  // namespace

LPOutcome solve_lp(const LinearProgram& lp) {
    const int n = static_cast<int>(lp.c.size());
    if (lp.M.cols() != n || lp.M.rows() != lp.r.size())
        throw std::invalid_argument("solve_lp: inconsistent dimensions");
    if (!lp.c.allFinite() || !lp.M.allFinite() || !lp.r.allFinite())
        throw std::invalid_argument("solve_lp: non-finite entries");
    // fold bounds into extra rows; their multipliers are not reported
    std::vector<std::pair<Vec, double>> extra;
    if (lp.lower) {
        for (int j = 0; j < n; ++j)
            if (std::isfinite((*lp.lower)(j))) extra.push_back({-Vec::Unit(n, j), -(*lp.lower)(j)});
    }
    if (lp.upper) {
        for (int j = 0; j < n; ++j)
            if (std::isfinite((*lp.upper)(j))) extra.push_back({Vec::Unit(n, j), (*lp.upper)(j)});
    }
    Mat M(lp.M.rows() + static_cast<int>(extra.size()), n);
    Vec r(M.rows());
    M.topRows(lp.M.rows()) = lp.M;
    r.head(lp.M.rows()) = lp.r;
    for (size_t k = 0; k < extra.size(); ++k) {
        M.row(lp.M.rows() + static_cast<int>(k)) = extra[k].first.transpose();
        r(lp.M.rows() + static_cast<int>(k)) = extra[k].second;
    }
    return solve_rows(lp.c, M, r, static_cast<int>(lp.M.rows()));
}

std::optional<Vec> find_feasible(const Mat& M, const Vec& r) {
    LinearProgram lp;
    lp.c = Vec::Zero(M.cols());
    lp.M = M;
    lp.r = r;
    LPOutcome out = solve_lp(lp);
    if (out.status == LPStatus::OPTIMAL) return out.primal_point;
    return std::nullopt;
}

}  // namespace setlat
