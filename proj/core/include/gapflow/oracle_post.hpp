// Post-processing of discrete Stokes solutions: strain energies, system
// assembly, boundary-force functionals via cutoff volume integrals, gap
// pressure averages, and blow-up statistics.
#ifndef GAPFLOW_ORACLE_POST_HPP
#define GAPFLOW_ORACLE_POST_HPP

#include "gapflow/stiffness.hpp"
#include "gapflow/stokes2d.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace gapflow {

// linear combination of solutions on one grid (masks taken from the first)
DiscreteStokesSolution combine(
    const std::vector<std::pair<double, const DiscreteStokesSolution*>>& terms);

// discrete 2 mu int e(ua):e(ub) over fluid cells (fluid nodes for shear)
double energy(const DiscreteStokesSolution& a, const DiscreteStokesSolution& b);

// solutions of the decomposed problems on a common grid: u_i^alpha with
// rigid data psi_alpha on particle i, and u_0 with the outer data phi
struct DecomposedSolves {
    int n = 2;
    std::vector<DiscreteStokesSolution> u1, u2; // indexed alpha-1
    DiscreteStokesSolution u0;
};

// Gram energies + b-vectors -> block stiffness system
StiffnessSystem assemble_from_fields(const DecomposedSolves& s);

// Cutoff test field v = chi * psi_beta for the boundary-force integral:
// chi = S((y+b)/(2b)) * T(|x - c1|), b(x) = theta (eps/2 + kappa x^2);
// optionally a lateral factor removing |x| < lateral_r0 (the truncated
// functional).
struct ForceCutoff {
    double eps = 1e-3;
    double kappa = 1.0;
    double theta = 0.6;     // vertical transition fraction of the wall height
    double cy = 0.0;        // disk-1 center height
    double t_inner = 0.5;   // radial bump: 1 inside, 0 outside
    double t_outer = 0.8;
    double lateral_r0 = 0.0; // 0 = full functional
    double lateral_w = 0.0;

    struct Chi {
        double value, dx, dy;
    };
    Chi chi(double x, double y) const;
};

// B_beta = int_{dD1} psi_beta . sigma[u_b, p_b] nu  (particle-outward nu),
// computed as -int_Omega (2 mu e(u_b):e(chi psi_beta) - p_b div(chi psi_beta))
double boundary_force(const DiscreteStokesSolution& ub, int beta, const ForceCutoff& cut);

// evaluates with two vertical transition fractions and reports the
// relative discrepancy (discretization indicator)
struct ForceResult {
    double value;
    double cutoff_discrepancy; // relative difference of the two cutoffs
};
ForceResult boundary_force_checked(const DiscreteStokesSolution& ub, int beta,
                                   ForceCutoff cut, double theta_alt = 0.0);

// mean of `field` (one value per cell) over the fluid cells of
// Omega_delta(xp): |xc - xp| < delta(xp), |yc| < eps/2 + kappa xc^2
double window_average(const DiscreteStokesSolution& s, const std::vector<double>& field,
                      double eps, double kappa, double xp);

// pressure variant of the above
double gap_pressure_average(const DiscreteStokesSolution& s, double eps, double kappa,
                            double xp);

struct GradScan {
    double xmin = 0.0;
    double xmax = 0.1;
    bool scale_sqrt_delta = false;
    double eps = 0.0, kappa = 1.0; // used by the sqrt-delta scaling
    // analytic field subtracted at face positions before differencing
    const std::function<std::array<double, 2>(double, double)>* subtract = nullptr;
};

// max Frobenius velocity gradient over interior fluid cells with
// xmin <= |xc| <= xmax (3x3 fluid neighborhood required)
double max_velocity_gradient(const DiscreteStokesSolution& s, const GradScan& scan);

// relative L2 velocity difference of a solution against one on a
// once-refined uniform grid (nested faces averaged)
double nested_velocity_diff(const DiscreteStokesSolution& coarse,
                            const DiscreteStokesSolution& fine);

} // namespace gapflow

#endif
