#include "gapflow/rates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gapflow {

namespace {
void check_eps(int n, double eps) {
    if (eps <= 0.0 || eps >= 1.0)
        throw std::domain_error("rate functions need 0 < eps < 1");
    // |ln eps| branches are meaningful only below 1/e
    if (n == 3 && eps >= 1.0 / std::numbers::e)
        throw std::domain_error("rate functions need eps < 1/e for n = 3");
}
} // namespace

double rho(int n, double eps) {
    check_eps(n, eps);
    if (n == 2) return 1.0 / std::sqrt(eps);
    if (n == 3) return std::abs(std::log(eps));
    return 1.0;
}

double r_eps(int n, double eps) {
    check_eps(n, eps);
    if (n == 2) return std::pow(eps, 1.0 / 24.0);
    if (n == 3) return 1.0 / std::abs(std::log(eps));
    return std::pow(eps, std::min(1.0 / 12.0, (n - 3) / 24.0));
}

double varrho(int alpha, int n, double eps) {
    check_eps(n, eps);
    if (alpha < 1 || alpha > n)
        throw std::domain_error("varrho: defined for alpha = 1..n");
    if (alpha <= n - 1) return std::pow(eps, (n - 1) / 24.0);
    if (n == 2) return std::abs(std::log(eps));
    return std::pow(eps, (n - 2) / 24.0);
}

double l_alpha(int alpha, int n, double mu) {
    const int m = n * (n + 1) / 2;
    if (alpha < 1 || alpha > m)
        throw std::domain_error("l_alpha: alpha out of range");
    return alpha <= n - 1 ? mu : 2.0 * mu;
}

double omega(int n, double eps) {
    check_eps(n, eps);
    if (n == 2) return std::abs(std::log(eps));
    if (n == 3) return 1.0;
    throw std::domain_error("omega: defined for n = 2, 3");
}

double k_n(int n, double kappa, double r0) {
    if (kappa <= 0 || r0 <= 0) throw std::domain_error("k_n: kappa, r0 > 0");
    if (n == 2) return -1.0 / (kappa * r0);
    if (n == 3)
        return std::numbers::pi * (std::log(std::sqrt(2.0 * kappa)) + std::log(r0)) / kappa;
    throw std::domain_error("k_n: defined for n = 2, 3");
}

double gap_prefactor(int n, double kappa) {
    if (kappa <= 0) throw std::domain_error("gap_prefactor: kappa > 0");
    if (n == 2) return std::numbers::pi / std::sqrt(2.0 * kappa);
    if (n == 3) return std::numbers::pi / (2.0 * kappa);
    throw std::domain_error("gap_prefactor: defined for n = 2, 3");
}

double leading_a11_diag(const GapGeometry& g, int alpha, double gstar) {
    return l_alpha(alpha, g.n, g.mu) * gap_prefactor(g.n, g.kappa) * rho(g.n, g.eps) + gstar;
}

double truncated_tail_bound(double r0, double C) {
    if (r0 <= 0 || C <= 0) throw std::domain_error("truncated_tail_bound: r0, C > 0");
    return C / r0 * std::exp(-1.0 / (2.0 * C * r0));
}

} // namespace gapflow
