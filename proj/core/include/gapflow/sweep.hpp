// Sweep driver: per-eps decomposed solves on the two-disk box, system
// assembly, blow-up factors, reconstructed-field statistics, localized
// gap solves, and the cross-eps fits.
#ifndef GAPFLOW_SWEEP_HPP
#define GAPFLOW_SWEEP_HPP

#include "gapflow/asymptotic.hpp"
#include "gapflow/oracle.hpp"

#include <optional>
#include <string>

namespace gapflow {

struct SweepConfig {
    BoxScene scene;                 // eps field overridden per sweep point
    std::vector<double> eps_list;   // strictly decreasing
    int throat_cells = 8;           // at eps_list.front(); scaled ~ eps^-1/2
    int gap_throat_cells = 10;      // localized gap solves
    double gap_r0 = 0.22;           // lateral radius of the localized domain
    double fit_r0 = 0.14;           // R0 used for K_n / window bookkeeping
    bool run_gap_solves = true;
    bool run_reconstruction = true;
    SolverOptions solver;
    unsigned jobs = 1;
};

struct SweepPoint {
    double eps = 0.0;
    bool ok = false;
    std::string error;

    StiffnessSystem system;
    Vec a11_diag;          // diagonal of A
    double sym_defect = 0; // |A - A^T| / |A|
    double c_bt_defect = 0;
    double min_eig_a = 0;
    double det_f0 = 0;
    double block_residual = 0;
    double condition = 0;

    Vec c2;                // block solve
    Vec c2_cramer;         // full determinant-ratio route
    Vec c2_reduced;        // n = 2,3 limit device
    Vec x1;                // C1 - C2 from the block solve
    Vec x1_cramer;         // Cramer on A x = B
    Vec x1_reduced;        // partial-diagonal route

    Vec bfac;              // cutoff-integral boundary forces
    Vec bfac_energy;       // b1 - B c2 consistency route
    double cutoff_disc = 0;
    Vec bfac_truncated;

    double max_pressure_dev = 0; // reconstructed |p - (q)_{delta;0}|
    double max_grad = 0;         // reconstructed max |grad u| near the gap
    double gap_w_tangential = 0; // sup |grad w|, alpha = 1
    double gap_w_normal = 0;     // sqrt(delta)-scaled sup, alpha = n
    double sum_grad_center = 0;  // |grad(u1+u2)| near x' = 0
    double sum_grad_mid = 0;     // same at |x'| ~ r0/2
    double bc_flux_correction = 0;
};

struct SweepSummary {
    std::vector<SweepPoint> points;
    std::optional<ExponentFit> pressure_slope;
    std::optional<ExponentFit> grad_slope;
    std::optional<LimitExtrapolation> c2_limit;
    std::optional<AsymptoticStressModel> model; // fitted from the sweep
    Vec bstar;                                  // boundary forces at min eps
    bool bfac_cauchy_monotone = false;
};

// smooth compatible default boundary data (a stream-function field)
BoundaryVelocity default_phi(double half_width);

SweepSummary run_sweep(const SweepConfig& cfg, const BoundaryVelocity& phi);

// helper shared with the CLI: one decomposed solve set at fixed eps
struct PointContext {
    BoxScene scene;
    TensorGrid grid;
    DecomposedSolves solves;
};
PointContext solve_decomposed(const BoxScene& scene, int throat_cells,
                              const BoundaryVelocity& phi, const SolverOptions& opts);

} // namespace gapflow

#endif
