#include "gapflow/stiffness.hpp"

#include <cmath>

namespace gapflow {

Mat StiffnessSystem::block() const {
    Mat blk(2 * m, 2 * m);
    blk.topLeftCorner(m, m) = A;
    blk.topRightCorner(m, m) = B;
    blk.bottomLeftCorner(m, m) = C;
    blk.bottomRightCorner(m, m) = D;
    return blk;
}

StiffnessSystem make_system(int n, const Mat& g11, const Mat& g12, const Mat& g21,
                            const Mat& g22, const Vec& b1, const Vec& b2) {
    const int m = n * (n + 1) / 2;
    if (g11.rows() != m || g11.cols() != m)
        throw std::invalid_argument("make_system: Gram block size mismatch");
    StiffnessSystem s;
    s.n = n;
    s.m = m;
    s.A = g11.transpose();
    s.B = (g11 + g21).transpose();
    s.C = (g11 + g12).transpose();
    s.D = (g11 + g12 + g21 + g22).transpose();
    s.b1 = b1;
    s.b2 = b2;
    return s;
}

BlockSolution solve_block_system(const StiffnessSystem& s) {
    const int m = s.m;
    const Mat blk = s.block();
    Vec y(2 * m);
    y.head(m) = s.y1();
    y.tail(m) = s.y2();

    BlockSolution sol;
    sol.condition = condition_number(blk);
    if (!std::isfinite(sol.condition))
        throw SingularMatrixError("solve_block_system: block matrix is singular");
    sol.ill_conditioned = sol.condition > 1e12;
    const Vec x = lu_solve(blk, y);
    sol.x1 = x.head(m);
    sol.x2 = x.tail(m);
    const double yn = std::max(y.norm(), 1e-300);
    sol.residual = (blk * x - y).norm() / yn;
    return sol;
}

namespace {

// rows: reduced first block (equations beta in rot) then full second block
Mat reduced_matrix(const StiffnessSystem& s) {
    const int n = s.n, m = s.m;
    const int r = m - n; // number of rotation modes
    Mat f(r + m, r + m);
    f.topLeftCorner(r, r) = s.A.bottomRightCorner(r, r);
    f.topRightCorner(r, m) = s.B.bottomRows(r);
    f.bottomLeftCorner(m, r) = s.C.rightCols(r);
    f.bottomRightCorner(m, m) = s.D;
    return f;
}

Vec reduced_rhs(const StiffnessSystem& s) {
    const int n = s.n, m = s.m;
    const int r = m - n;
    Vec y(r + m);
    y.head(r) = s.y1().tail(r);
    y.tail(m) = s.y2();
    return y;
}

Vec det_ratio_solve_columns(const Mat& f, const Vec& y, int first_col, int count) {
    const double det = det_lu(f);
    if (det == 0.0 || !std::isfinite(det))
        throw SingularMatrixError("cramer: zero determinant");
    Vec out(count);
    for (int k = 0; k < count; ++k) {
        Mat fk = f;
        fk.col(first_col + k) = y;
        out[k] = det_lu(fk) / det;
    }
    return out;
}

} // namespace

Vec cramer_c2_full(const StiffnessSystem& s) {
    const int m = s.m;
    Mat f = s.block();
    Vec y(2 * m);
    y.head(m) = s.y1();
    y.tail(m) = s.y2();
    return det_ratio_solve_columns(f, y, m, m);
}

Vec cramer_c2_reduced(const StiffnessSystem& s) {
    if (s.n > 3)
        throw std::domain_error("cramer_c2_reduced: reduced system is the n = 2,3 device");
    const Mat f = reduced_matrix(s);
    const Vec y = reduced_rhs(s);
    return det_ratio_solve_columns(f, y, s.m - s.n, s.m);
}

Vec cramer_c2(const StiffnessSystem& s) { return cramer_c2_full(s); }

Vec cramer_c1_minus_c2(const StiffnessSystem& s, const BlowupFactors& f) {
    if (f.values.size() != s.m)
        throw std::invalid_argument("cramer_c1_minus_c2: factor count mismatch");
    return cramer_solve(s.A, f.values);
}

Vec cramer_c1_minus_c2_reduced(const StiffnessSystem& s, const BlowupFactors& f) {
    const int n = s.n, m = s.m;
    if (n > 3)
        throw std::domain_error("cramer_c1_minus_c2_reduced: n = 2,3 route");
    if (f.values.size() != m)
        throw std::invalid_argument("cramer_c1_minus_c2_reduced: factor count mismatch");
    const int r = m - n;
    const Mat a0 = s.A.bottomRightCorner(r, r);
    const double det_a0 = det_lu(a0);
    if (det_a0 == 0.0 || !std::isfinite(det_a0))
        throw SingularMatrixError("cramer_c1_minus_c2_reduced: det A0 = 0");

    Vec out(m);
    for (int alpha = 1; alpha <= n; ++alpha) {
        // bordered matrix: first column the factors, then the rotation
        // columns of A restricted to rows (alpha, rot)
        Mat a1(1 + r, 1 + r);
        a1(0, 0) = f.values[alpha - 1];
        for (int c = 0; c < r; ++c) a1(0, 1 + c) = s.A(alpha - 1, n + c);
        for (int rr = 0; rr < r; ++rr) {
            a1(1 + rr, 0) = f.values[n + rr];
            for (int c = 0; c < r; ++c) a1(1 + rr, 1 + c) = s.A(n + rr, n + c);
        }
        const double diag = s.A(alpha - 1, alpha - 1);
        if (diag == 0.0)
            throw SingularMatrixError("cramer_c1_minus_c2_reduced: zero diagonal");
        out[alpha - 1] = det_lu(a1) / (diag * det_a0);
    }
    for (int alpha = n + 1; alpha <= m; ++alpha) {
        Mat a2 = a0;
        a2.col(alpha - n - 1) = f.values.tail(r);
        out[alpha - 1] = det_lu(a2) / det_a0;
    }
    return out;
}

LimitExtrapolation limit_constants(const std::vector<std::pair<double, Vec>>& sweep) {
    if (sweep.size() < 3)
        throw std::invalid_argument("limit_constants: need at least 3 sweep points");
    for (std::size_t k = 1; k < sweep.size(); ++k)
        if (!(sweep[k].first < sweep[k - 1].first))
            throw std::invalid_argument("limit_constants: eps must decrease");
    const int m = static_cast<int>(sweep.front().second.size());
    const std::size_t K = sweep.size();
    LimitExtrapolation ex;
    ex.limit = Vec(m);
    ex.error = Vec(m);
    for (int a = 0; a < m; ++a) {
        const double c_prev2 = sweep[K - 3].second[a];
        const double c_prev = sweep[K - 2].second[a];
        const double c_last = sweep[K - 1].second[a];
        const double d_prev = c_prev - c_prev2;
        const double d_last = c_last - c_prev;
        const double scale = std::max({std::abs(c_last), std::abs(c_prev), 1e-300});
        if (std::abs(d_last) <= 1e-14 * scale) {
            ex.limit[a] = c_last;
            ex.error[a] = 0.0;
            continue;
        }
        if (std::abs(d_last) > std::abs(d_prev) * (1.0 + 1e-9))
            throw NonConvergentSweepError("limit_constants: differences increase");
        const double q = d_last / d_prev;
        if (std::abs(q) < 1.0) {
            const double corr = d_last * q / (1.0 - q);
            ex.limit[a] = c_last + corr;
            ex.error[a] = std::abs(corr) + 1e-15 * scale;
        } else {
            ex.limit[a] = c_last;
            ex.error[a] = std::abs(d_last);
        }
    }
    return ex;
}

} // namespace gapflow
