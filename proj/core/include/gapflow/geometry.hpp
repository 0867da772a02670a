// Two-particle gap geometry, the gap function delta, the normalized
// height G = x_n/delta, and the rigid-displacement basis psi_alpha.
#ifndef GAPFLOW_GEOMETRY_HPP
#define GAPFLOW_GEOMETRY_HPP

#include <Eigen/Dense>
#include <stdexcept>

namespace gapflow {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Gap between two rigid particles whose facing walls are
// x_n = +-(eps/2 + kappa*|x'|^2) for |x'| <= 2*r0.
struct GapGeometry {
    int n = 2;          // space dimension, >= 2
    double eps = 0.0;   // half-distance parameter, >= 0 (0 = touching)
    double kappa = 1.0; // wall curvature, > 0
    double r0 = 0.5;    // gap radius, > 0
    double mu = 1.0;    // viscosity, > 0

    GapGeometry() = default;
    GapGeometry(int n_, double eps_, double kappa_, double r0_, double mu_ = 1.0);

    // number of rigid modes n(n+1)/2
    int mode_count() const { return n * (n + 1) / 2; }
};

// Index alpha in 1..n(n+1)/2 decoded to a translation axis or a
// rotation pair (i,j), i < j.  Ordering: alpha <= n translations e_alpha;
// alpha = n+1..2n-1 the pairs (alpha-n, n); alpha >= 2n the pairs
// 1 <= i < j < n in lexicographic order.
struct RigidMode {
    enum class Kind { Translation, Rotation };
    int alpha = 1;
    int n = 2;
    Kind kind = Kind::Translation;
    int axis = 1; // translation axis (1-based), valid for Kind::Translation
    int i = 0, j = 0; // rotation pair (1-based, i<j), valid for Kind::Rotation

    static RigidMode decode(int alpha, int n);
    static int encode(const RigidMode& m);
    bool is_rotation() const { return kind == Kind::Rotation; }
};

// delta(x') = eps + 2*kappa*|x'|^2 for the (n-1)-vector x'.
double delta(const GapGeometry& g, const Vec& xp);

// G(x) = x_n / delta(x'), in (-1/2, 1/2) inside the gap and exactly
// +-1/2 on the walls.
double frak_g(const GapGeometry& g, const Vec& x);

// psi_alpha evaluated at x.
Vec psi(const RigidMode& m, const Vec& x);

// grad psi_alpha (constant in x; antisymmetric for rotations, zero for
// translations).  Entry (r,c) = d_c psi^(r).
Mat grad_psi(const RigidMode& m);

// strict membership test for Omega_t(0')
bool in_region(const GapGeometry& g, double t, const Vec& x);

// wall classification with absolute tolerance: +1 on Gamma^+, -1 on
// Gamma^-, 0 elsewhere
int wall_side(const GapGeometry& g, const Vec& x, double tol = 1e-12);

namespace detail {
inline void check_dim(const GapGeometry& g, const Vec& x) {
    if (x.size() != g.n)
        throw std::invalid_argument("point dimension does not match geometry");
}
inline void check_dim_prime(const GapGeometry& g, const Vec& xp) {
    if (xp.size() != g.n - 1)
        throw std::invalid_argument("x' dimension must be n-1");
}
} // namespace detail

} // namespace gapflow

#endif
