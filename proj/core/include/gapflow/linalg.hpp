// Small dense helpers: determinants, Cramer column-replacement solves,
// and LU with condition estimates.
#ifndef GAPFLOW_LINALG_HPP
#define GAPFLOW_LINALG_HPP

#include "gapflow/geometry.hpp"

#include <stdexcept>

namespace gapflow {

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// determinant by LU with partial pivoting
double det_lu(const Mat& a);

// x_k = det(A with column k replaced by b) / det(A)
Vec cramer_solve(const Mat& a, const Vec& b);

// LU solve; throws SingularMatrixError when the factorization degenerates
Vec lu_solve(const Mat& a, const Vec& b);

// 1-norm condition number estimate (exact inverse; m is small here)
double condition_number(const Mat& a);

} // namespace gapflow

#endif
