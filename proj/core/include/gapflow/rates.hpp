// Rate functions and scalar constants of the asymptotic theory.
#ifndef GAPFLOW_RATES_HPP
#define GAPFLOW_RATES_HPP

#include "gapflow/geometry.hpp"

namespace gapflow {

// diagonal growth rate: eps^{-1/2} (n=2), |ln eps| (n=3), 1 (n>3)
double rho(int n, double eps);

// convergence rate of the blow-up factors:
// eps^{1/24} (n=2), |ln eps|^{-1} (n=3), eps^{min(1/12,(n-3)/24)} (n>3)
double r_eps(int n, double eps);

// per-mode error size, defined for alpha = 1..n
double varrho(int alpha, int n, double eps);

// L_alpha: mu for alpha <= n-1, 2*mu otherwise
double l_alpha(int alpha, int n, double mu);

// omega_n: |ln eps| (n=2), 1 (n=3)
double omega(int n, double eps);

// K_n remainder constant of the narrow-gap integral expansion:
// K_2 = -1/(kappa*r0), K_3 = pi (ln sqrt(2 kappa) + ln r0)/kappa
double k_n(int n, double kappa, double r0);

// Leading coefficient of int dx'/(eps+2 kappa |x'|^2):
//   n=2: pi/sqrt(2 kappa)   (the exact arctan expansion)
//   n=3: pi/(2 kappa)
// The unified (pi/2k)^{(n-1)/2} display misses a sqrt(pi) at n=2; the
// exact values here are forced by the closed forms and by K_n.
double gap_prefactor(int n, double kappa);

// asymptotic diagonal stiffness entry
// L_alpha * gap_prefactor * rho_n(eps) + gstar
double leading_a11_diag(const GapGeometry& g, int alpha, double gstar);

// exponential tail of the truncated blow-up factor: (C/r0) e^{-1/(2 C r0)}
double truncated_tail_bound(double r0, double C);

} // namespace gapflow

#endif
