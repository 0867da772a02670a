#include "gapflow/asymptotic.hpp"

#include "gapflow/stiffness.hpp"

#include <cmath>

namespace gapflow {

void AsymptoticStressModel::validate() const {
    const int m = n * (n + 1) / 2;
    if (low_branch()) {
        if (ratio_translation.size() != n || ratio_rotation.size() != m - n ||
            gtilde.size() != n)
            throw std::invalid_argument("asymptotic model: missing determinant ratios");
    } else {
        if (ratio_full.size() != m)
            throw std::invalid_argument("asymptotic model: missing determinant ratios");
    }
}

StressPrediction predict_stress(const AsymptoticStressModel& model,
                                const GapGeometry& g, const Vec& x) {
    model.validate();
    if (model.n != g.n) throw std::invalid_argument("predict_stress: dimension mismatch");
    const int n = g.n;
    const int m = g.mode_count();
    const Vec xp = x.head(n - 1);
    const double d = delta(g, xp);

    StressPrediction out;
    out.stress = Mat::Zero(n, n);
    if (model.low_branch()) {
        const double rinv = 1.0 / rho(n, g.eps);
        const double pre = gap_prefactor(n, g.kappa);
        for (int a = 1; a <= n; ++a) {
            const double la = l_alpha(a, n, g.mu);
            const double w = model.ratio_translation[a - 1] * rinv / (la * pre) /
                             (1.0 + model.gtilde[a - 1] * rinv);
            if (w != 0.0)
                out.stress += w * stress_at(g, 1, RigidMode::decode(a, n), x);
        }
        for (int a = n + 1; a <= m; ++a) {
            const double w = model.ratio_rotation[a - n - 1];
            if (w != 0.0)
                out.stress += w * stress_at(g, 1, RigidMode::decode(a, n), x);
        }
        out.remainder_bound = rinv / std::sqrt(d);
    } else {
        for (int a = 1; a <= m; ++a) {
            const double w = model.ratio_full[a - 1];
            if (w != 0.0)
                out.stress += w * stress_at(g, 1, RigidMode::decode(a, n), x);
        }
        out.remainder_bound = 1.0 / std::sqrt(d);
    }
    return out;
}

StressBounds stress_bounds(const AsymptoticStressModel& model, const GapGeometry& g) {
    model.validate();
    const int n = g.n;
    const double e2 = g.eps * g.eps;
    StressBounds b;
    if (model.low_branch()) {
        if (model.ratio_translation[n - 1] == 0.0)
            throw std::domain_error("stress_bounds: the alpha = n determinant ratio vanishes");
        const double kfac = std::pow(g.kappa, 0.5 * (n - 1));
        const double scale = 1.0 / (e2 * rho(n, g.eps));
        b.lower = kfac * std::abs(model.ratio_translation[n - 1]) / g.mu * scale;
        double mx = 0.0;
        for (int a = 0; a < n; ++a)
            mx = std::max(mx, std::abs(model.ratio_translation[a]));
        b.upper = kfac * mx / g.mu * scale;
    } else {
        if (model.ratio_full[n - 1] == 0.0)
            throw std::domain_error("stress_bounds: the alpha = n determinant ratio vanishes");
        b.lower = std::abs(model.ratio_full[n - 1]) / e2;
        double mx = 0.0;
        for (int a = 0; a < n; ++a) mx = std::max(mx, std::abs(model.ratio_full[a]));
        b.upper = mx / e2;
    }
    return b;
}

ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& sweep) {
    const int k = static_cast<int>(sweep.size());
    if (k < 3) throw std::invalid_argument("fit_exponent: need at least 3 points");
    double sx = 0, sy = 0;
    for (const auto& [e, v] : sweep) {
        if (e <= 0 || v <= 0)
            throw std::domain_error("fit_exponent: positive eps and values required");
        sx += std::log(e);
        sy += std::log(v);
    }
    const double mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0;
    for (const auto& [e, v] : sweep) {
        const double dx = std::log(e) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(v) - my);
    }
    ExponentFit f;
    f.slope = sxy / sxx;
    double ss = 0;
    for (const auto& [e, v] : sweep) {
        const double r = (std::log(v) - my) - f.slope * (std::log(e) - mx);
        ss += r * r;
    }
    f.stderr_slope = k > 2 ? std::sqrt(ss / (k - 2) / sxx) : 0.0;
    return f;
}

GeometryConstantFit fit_geometry_constant(
    const std::vector<std::pair<double, double>>& a11_sweep, const GapGeometry& g,
    int alpha) {
    if (alpha < 1 || alpha > g.n)
        throw std::domain_error("fit_geometry_constant: alpha = 1..n");
    const double la = l_alpha(alpha, g.n, g.mu);
    const double pre = gap_prefactor(g.n, g.kappa);
    std::vector<std::pair<double, Vec>> rem;
    rem.reserve(a11_sweep.size());
    for (const auto& [e, a11] : a11_sweep) {
        Vec v(1);
        v[0] = a11 - la * pre * rho(g.n, e);
        rem.emplace_back(e, v);
    }
    const LimitExtrapolation ex = limit_constants(rem);
    GeometryConstantFit fit;
    fit.gstar = ex.limit[0];
    fit.error = ex.error[0];
    fit.l_kn = la * k_n(g.n, g.kappa, g.r0);
    fit.mstar = fit.gstar - fit.l_kn;
    return fit;
}

} // namespace gapflow
