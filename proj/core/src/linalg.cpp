#include "gapflow/linalg.hpp"

#include <Eigen/LU>

#include <cmath>

namespace gapflow {

double det_lu(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det_lu: square matrix required");
    return Eigen::PartialPivLU<Mat>(a).determinant();
}

Vec cramer_solve(const Mat& a, const Vec& b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw std::invalid_argument("cramer_solve: dimension mismatch");
    const double det = det_lu(a);
    if (det == 0.0 || !std::isfinite(det))
        throw SingularMatrixError("cramer_solve: zero determinant");
    Vec x(a.cols());
    for (int k = 0; k < a.cols(); ++k) {
        Mat ak = a;
        ak.col(k) = b;
        x[k] = det_lu(ak) / det;
    }
    return x;
}

Vec lu_solve(const Mat& a, const Vec& b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw std::invalid_argument("lu_solve: dimension mismatch");
    Eigen::PartialPivLU<Mat> lu(a);
    const double det = lu.determinant();
    if (det == 0.0 || !std::isfinite(det))
        throw SingularMatrixError("lu_solve: singular matrix");
    return lu.solve(b);
}

double condition_number(const Mat& a) {
    Eigen::PartialPivLU<Mat> lu(a);
    const double det = lu.determinant();
    if (det == 0.0 || !std::isfinite(det)) return std::numeric_limits<double>::infinity();
    const Mat inv = lu.inverse();
    auto norm1 = [](const Mat& m) {
        double best = 0.0;
        for (int c = 0; c < m.cols(); ++c) best = std::max(best, m.col(c).cwiseAbs().sum());
        return best;
    };
    return norm1(a) * norm1(inv);
}

} // namespace gapflow
