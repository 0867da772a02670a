// Explicit auxiliary velocity/pressure fields of the narrow gap, their
// analytic gradients, strains, stresses, and closed-form momentum
// residuals.
#ifndef GAPFLOW_FIELDS_HPP
#define GAPFLOW_FIELDS_HPP

#include "gapflow/coefficients.hpp"
#include "gapflow/geometry.hpp"

namespace gapflow {

struct FieldSample {
    Vec x;
    Vec velocity;
    double pressure = 0.0;
    Mat grad;   // grad(r,c) = d_c u^(r)
    Mat strain; // (grad + grad^T)/2
    Mat stress; // 2 mu strain - p I
    double divergence = 0.0;
};

// correction field F_alpha; identically zero for alpha >= 2n
Vec correction_field(const GapGeometry& g, const AuxCoefficients& c,
                     const RigidMode& m, const Vec& x);

// u_bar_i^alpha, i in {1,2}; equals psi_alpha on the wall facing
// particle i and vanishes on the opposite wall
Vec u_bar(const GapGeometry& g, int i, const RigidMode& m, const Vec& x);

// p_bar_i^alpha; p_bar_2 = -p_bar_1 pointwise
double p_bar(const GapGeometry& g, int i, const RigidMode& m, const Vec& x);

// analytic gradient of u_bar (closed-form differentiation)
Mat grad_u_bar(const GapGeometry& g, int i, const RigidMode& m, const Vec& x);

// closed-form mu d_nn u^(j) - d_j p for component j (1-based)
double momentum_residual(const GapGeometry& g, const AuxCoefficients& c, int i,
                         const RigidMode& m, int j, const Vec& x);

// Cauchy stress of (u_bar, p_bar)
Mat stress_at(const GapGeometry& g, int i, const RigidMode& m, const Vec& x);

FieldSample sample_field(const GapGeometry& g, int i, const RigidMode& m,
                         const Vec& x);

} // namespace gapflow

#endif
