// Narrow-gap integrals: closed forms (n = 2, 3), the asymptotic
// expansion, and an adaptive Gauss-Kronrod evaluator for general
// dimension and monomial weights.
#ifndef GAPFLOW_QUADRATURE_HPP
#define GAPFLOW_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace gapflow {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// weight applied to the integrand 1/(eps + 2 kappa |x'|^2)
enum class GapWeight { None, AxisSquared, RadiusSquared };

// int_{|x'|<r0} dx' / (eps + 2 kappa |x'|^2), closed form, n in {2,3}
double gap_integral_closed(int n, double eps, double kappa, double r0);

// gap_prefactor(n,kappa) * rho_n(eps) + K_n(kappa,r0)
double gap_integral_asymptotic(int n, double eps, double kappa, double r0);

// adaptive quadrature of the (optionally weighted) gap integral via the
// 1D radial reduction; eps = 0 is allowed for weighted integrands
double gap_integral_quadrature(int n, double eps, double kappa, double r0,
                               GapWeight weight = GapWeight::None,
                               double rel_tol = 1e-10);

// general-purpose adaptive Gauss-Kronrod on [a,b]; near-origin seeds may
// be supplied to resolve boundary layers (used by the gap integrals)
double adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                              double b, double rel_tol, double layer_width = 0.0,
                              int max_depth = 60);

} // namespace gapflow

#endif
