// Asymptotic Cauchy-stress formulas, bounds at the gap center, and the
// sweep-fitting utilities (exponents, geometry constants).
#ifndef GAPFLOW_ASYMPTOTIC_HPP
#define GAPFLOW_ASYMPTOTIC_HPP

#include "gapflow/fields.hpp"
#include "gapflow/rates.hpp"

#include <utility>
#include <vector>

namespace gapflow {

struct AsymptoticStressModel {
    int n = 2;
    double kappa = 1.0;
    double mu = 1.0;
    // low-dimension branch (n = 2,3)
    Vec ratio_translation; // det A1*^a / det A0*, a = 1..n
    Vec ratio_rotation;    // det A2*^a / det A0*, a = n+1..m
    Vec gtilde;            // normalized geometry constants, a = 1..n
    // high-dimension branch (n > 3)
    Vec ratio_full; // det A3*^a / det A*, a = 1..m

    bool low_branch() const { return n <= 3; }
    void validate() const;
};

struct StressPrediction {
    Mat stress;              // leading-term sum
    double remainder_bound;  // size of the dropped remainder at this x
};

StressPrediction predict_stress(const AsymptoticStressModel& model,
                                const GapGeometry& g, const Vec& x);

struct StressBounds {
    double lower, upper;
};

// bounds on |sigma| at the gap center x' = 0
StressBounds stress_bounds(const AsymptoticStressModel& model, const GapGeometry& g);

struct ExponentFit {
    double slope;
    double stderr_slope;
};

// least-squares slope of log(value) against log(eps)
ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& sweep);

struct GeometryConstantFit {
    double gstar;  // extrapolated remainder a11(eps) - L_a P_n rho_n(eps)
    double error;
    double l_kn;   // L_alpha * K_n part
    double mstar;  // gstar - l_kn (reported, never asserted)
};

GeometryConstantFit fit_geometry_constant(
    const std::vector<std::pair<double, double>>& a11_sweep, const GapGeometry& g,
    int alpha);

} // namespace gapflow

#endif
