// Block linear system for the free constants, Cramer column-replacement
// solutions, and the limit-constant extrapolation bookkeeping.
#ifndef GAPFLOW_STIFFNESS_HPP
#define GAPFLOW_STIFFNESS_HPP

#include "gapflow/geometry.hpp"
#include "gapflow/linalg.hpp"

#include <utility>
#include <vector>

namespace gapflow {

// Blocks in equation orientation: row = mode equation beta, column =
// mode unknown alpha.  A(b,a) = a_11^{ab}; B(b,a) = sum_i a_i1^{ab};
// C(b,a) = sum_j a_1j^{ab}; D(b,a) = sum_ij a_ij^{ab}.
struct StiffnessSystem {
    int n = 2;
    int m = 3;
    Mat A, B, C, D;
    Vec b1, b2; // b_1^beta, b_2^beta

    Vec y1() const { return b1; }
    Vec y2() const { return b1 + b2; }
    Mat block() const; // 2m x 2m [[A,B],[C,D]]
};

// builds the system from the four Gram blocks g_ij(alpha,beta) = a_ij^{ab}
StiffnessSystem make_system(int n, const Mat& g11, const Mat& g12, const Mat& g21,
                            const Mat& g22, const Vec& b1, const Vec& b2);

struct BlockSolution {
    Vec x1; // C_1^a - C_2^a
    Vec x2; // C_2^a
    double residual = 0.0;
    double condition = 0.0;
    bool ill_conditioned = false; // condition > 1e12 (warning, not error)
};

// LU solve of the 2m x 2m block system
BlockSolution solve_block_system(const StiffnessSystem& s);

// C_2 by determinant ratios on the full 2m x 2m system (exact Cramer,
// any n); matches solve_block_system
Vec cramer_c2_full(const StiffnessSystem& s);

// C_2 by the reduced n^2 x n^2 system that drops the divergent
// translation unknowns (the n = 2,3 limit device; asymptotic only)
Vec cramer_c2_reduced(const StiffnessSystem& s);

// dispatch: full Cramer for the finite-gap value
Vec cramer_c2(const StiffnessSystem& s);

struct BlowupFactors {
    enum class Provenance { Oracle, Truncated, ExtrapolatedLimit };
    Vec values;
    Provenance provenance = Provenance::Oracle;
};

// C_1 - C_2 from the mode-force system A x = B[phi]: exact column-
// replacement Cramer (identical to an LU solve of the same system)
Vec cramer_c1_minus_c2(const StiffnessSystem& s, const BlowupFactors& f);

// the n = 2,3 partial-diagonal factorization route; asymptotically equal
// to the exact route, both are reported by callers
Vec cramer_c1_minus_c2_reduced(const StiffnessSystem& s, const BlowupFactors& f);

struct NonConvergentSweepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LimitExtrapolation {
    Vec limit;
    Vec error; // per-mode error estimate from the last two differences
};

// Richardson-style extrapolation of C_2(eps) along a geometrically
// decreasing eps sweep
LimitExtrapolation limit_constants(const std::vector<std::pair<double, Vec>>& sweep);

} // namespace gapflow

#endif
