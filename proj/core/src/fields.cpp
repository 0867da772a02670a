#include "gapflow/fields.hpp"

#include <cmath>

namespace gapflow {

namespace {

struct GapPoint {
    int n;
    double delta, G, s2; // s2 = 4 kappa |x'|^2 / delta = (x'.grad delta)/delta
    Vec x;
    double kappa;
};

GapPoint prepare(const GapGeometry& g, const Vec& x) {
    detail::check_dim(g, x);
    const Vec xp = x.head(g.n - 1);
    const double rp = xp.norm();
    if (rp > 2.0 * g.r0)
        throw std::domain_error("auxiliary field: |x'| > 2*r0");
    const double d = g.eps + 2.0 * g.kappa * xp.squaredNorm();
    if (g.eps == 0.0 && x.norm() < 1e-8)
        throw std::domain_error("auxiliary field: singular at the touching point");
    const double xn = x[g.n - 1];
    if (std::abs(xn) > 0.5 * d * (1.0 + 1e-14))
        throw std::domain_error("auxiliary field: point outside closure of Omega_{2R0}");
    GapPoint p;
    p.n = g.n;
    p.delta = d;
    p.G = xn / d;
    p.s2 = 4.0 * g.kappa * xp.squaredNorm() / d;
    p.x = x;
    p.kappa = g.kappa;
    return p;
}

inline double dG(const GapPoint& p, int j) {
    // 0-based j; d_j G = -4k x_j G / delta for j < n-1, 1/delta for j = n-1
    if (j == p.n - 1) return 1.0 / p.delta;
    return -4.0 * p.kappa * p.x[j] * p.G / p.delta;
}

void eval_correction(const GapPoint& p, const AuxCoefficients& c,
                     const RigidMode& m, Vec& F, Mat& dF) {
    const int n = p.n;
    const double d = p.delta;
    const double k = p.kappa;
    F = Vec::Zero(n);
    dF = Mat::Zero(n, n);
    const int alpha = m.alpha;

    if (alpha <= n - 1) {
        // (d_alpha delta / 2) psi_n
        F[n - 1] = 2.0 * k * p.x[alpha - 1];
        dF(n - 1, alpha - 1) = 2.0 * k;
        return;
    }
    if (alpha == n) {
        const double W = c.a1 * p.s2 + c.a2;
        for (int i = 0; i < n - 1; ++i) F[i] = c.a1 * p.x[i] / d;
        F[n - 1] = p.G * W;
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) {
                dF(i, j) = -4.0 * k * c.a1 * p.x[i] * p.x[j] / (d * d);
                if (i == j) dF(i, j) += c.a1 / d;
            }
        for (int j = 0; j < n - 1; ++j) {
            const double dW = 4.0 * k * c.a1 * p.x[j] * (2.0 - p.s2) / d;
            dF(n - 1, j) = dG(p, j) * W + p.G * dW;
        }
        dF(n - 1, n - 1) = W / d;
        return;
    }
    if (alpha <= 2 * n - 1) {
        const int b = alpha - n - 1; // 0-based tangential index beta
        const double xb = p.x[b];
        const double xn = p.x[n - 1];
        const double V = c.b1 * p.s2 + c.b4;
        for (int i = 0; i < n - 1; ++i) F[i] = c.b1 * p.x[i] * xb / d;
        F[b] += c.b2 + c.b3 * xn * p.G;
        F[n - 1] = xb * p.G * V + c.b5 * xb * xn * p.G * p.G;

        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) {
                double v = -4.0 * k * c.b1 * p.x[i] * xb * p.x[j] / (d * d);
                if (i == j) v += c.b1 * xb / d;
                if (j == b) v += c.b1 * p.x[i] / d;
                dF(i, j) = v;
            }
        for (int j = 0; j < n - 1; ++j) dF(b, j) += c.b3 * xn * dG(p, j);
        dF(b, n - 1) += 2.0 * c.b3 * p.G;
        for (int j = 0; j < n - 1; ++j) {
            const double dV = 4.0 * k * c.b1 * p.x[j] * (2.0 - p.s2) / d;
            double v = xb * dG(p, j) * V + xb * p.G * dV +
                       2.0 * c.b5 * xb * xn * p.G * dG(p, j);
            if (j == b) v += p.G * V + c.b5 * xn * p.G * p.G;
            dF(n - 1, j) = v;
        }
        dF(n - 1, n - 1) = xb * V / d + 3.0 * c.b5 * xb * p.G * p.G;
        return;
    }
    // alpha >= 2n: no correction
}

double sign_of(int i) {
    if (i != 1 && i != 2) throw std::domain_error("particle index must be 1 or 2");
    return i == 1 ? 1.0 : -1.0;
}

} // namespace

Vec correction_field(const GapGeometry& g, const AuxCoefficients& c,
                     const RigidMode& m, const Vec& x) {
    const GapPoint p = prepare(g, x);
    Vec F;
    Mat dF;
    eval_correction(p, c, m, F, dF);
    return F;
}

Vec u_bar(const GapGeometry& g, int i, const RigidMode& m, const Vec& x) {
    const double sg = sign_of(i);
    const GapPoint p = prepare(g, x);
    const AuxCoefficients c = AuxCoefficients::make(g.n, g.kappa);
    Vec F;
    Mat dF;
    eval_correction(p, c, m, F, dF);
    const double s = 0.5 + sg * p.G;
    const double q = sg * (p.G * p.G - 0.25);
    return psi(m, x) * s + q * F;
}

Mat grad_u_bar(const GapGeometry& g, int i, const RigidMode& m, const Vec& x) {
    const double sg = sign_of(i);
    const GapPoint p = prepare(g, x);
    const AuxCoefficients c = AuxCoefficients::make(g.n, g.kappa);
    Vec F;
    Mat dF;
    eval_correction(p, c, m, F, dF);
    const double s = 0.5 + sg * p.G;
    const double q = sg * (p.G * p.G - 0.25);
    const Vec ps = psi(m, x);
    const Mat dps = grad_psi(m);
    const int n = g.n;
    Mat M(n, n);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) {
            const double dGj = dG(p, j);
            M(r, j) = dps(r, j) * s + ps[r] * sg * dGj +
                      sg * 2.0 * p.G * dGj * F[r] + q * dF(r, j);
        }
    return M;
}

double p_bar(const GapGeometry& g, int i, const RigidMode& m, const Vec& x) {
    const double sg = sign_of(i);
    const GapPoint p = prepare(g, x);
    const AuxCoefficients c = AuxCoefficients::make(g.n, g.kappa);
    const int n = g.n;
    const int alpha = m.alpha;
    const double d = p.delta;
    const double xn = p.x[n - 1];
    const double mu = g.mu;
    double P = 0.0;
    if (alpha <= n - 1) {
        P = 4.0 * g.kappa * mu * p.x[alpha - 1] * xn / (d * d);
    } else if (alpha == n) {
        const double W = c.a1 * p.s2 + c.a2;
        P = -mu * c.a1 / (4.0 * g.kappa * d * d) + 3.0 * mu * xn * xn * W / (d * d * d);
    } else if (alpha <= 2 * n - 1) {
        const double xb = p.x[alpha - n - 1];
        const double V = c.b1 * p.s2 + c.b4;
        P = mu * xb / (d * d) * (3.0 * xn * xn * V / d + c.b6);
    }
    return sg * P;
}

double momentum_residual(const GapGeometry& g, const AuxCoefficients& c, int i,
                         const RigidMode& m, int j, const Vec& x) {
    if (j < 1 || j > g.n) throw std::domain_error("momentum_residual: bad component");
    const double sg = sign_of(i);
    const GapPoint p = prepare(g, x);
    const int n = g.n;
    const int alpha = m.alpha;
    const double d = p.delta;
    const double k = g.kappa;
    const double xn = p.x[n - 1];
    const double mu = g.mu;

    if (alpha >= 2 * n) return 0.0;

    if (j == n) {
        if (alpha > n && alpha <= 2 * n - 1) {
            // second vertical derivative of the quintic-in-G correction;
            // the inner constant is 3/8, fixed by the fields themselves
            const double xb = p.x[alpha - n - 1];
            return sg * 4.0 * mu * c.b5 * xb * p.G * (5.0 * p.G * p.G - 0.375) / d;
        }
        return 0.0;
    }

    const int jj = j - 1;
    const double xj = p.x[jj];
    double R = 0.0;
    if (alpha <= n - 1) {
        double v = -8.0 * k * p.x[alpha - 1] * xj / (d * d * d);
        if (jj == alpha - 1) v += 1.0 / (d * d);
        R = -4.0 * k * mu * xn * v;
    } else if (alpha == n) {
        const double W = c.a1 * p.s2 + c.a2;
        const double dW = 4.0 * k * c.a1 * xj * (2.0 - p.s2) / d;
        R = -3.0 * mu * xn * xn * (dW / (d * d * d) - 12.0 * k * xj * W / (d * d * d * d));
    } else {
        const int b = alpha - n - 1;
        const double xb = p.x[b];
        const double V = c.b1 * p.s2 + c.b4;
        const double dV = 4.0 * k * c.b1 * xj * (2.0 - p.s2) / d;
        double dterm = xb * dV / (d * d * d) - 12.0 * k * xb * xj * V / (d * d * d * d);
        if (jj == b) dterm += V / (d * d * d);
        R = -3.0 * mu * xn * xn * dterm;
        // the vertical-second-derivative source lives only in component
        // alpha-n: 2/delta from x_n*s plus the quartic-in-G piece
        if (jj == b)
            R += mu * (2.0 + c.b3 * (24.0 * p.G * p.G - 1.0) / 2.0) / d;
    }
    return sg * R;
}

Mat stress_at(const GapGeometry& g, int i, const RigidMode& m, const Vec& x) {
    const Mat grad = grad_u_bar(g, i, m, x);
    const double pr = p_bar(g, i, m, x);
    const Mat e = 0.5 * (grad + grad.transpose());
    Mat s = 2.0 * g.mu * e;
    s.diagonal().array() -= pr;
    return s;
}

FieldSample sample_field(const GapGeometry& g, int i, const RigidMode& m,
                         const Vec& x) {
    FieldSample fs;
    fs.x = x;
    fs.velocity = u_bar(g, i, m, x);
    fs.pressure = p_bar(g, i, m, x);
    fs.grad = grad_u_bar(g, i, m, x);
    fs.strain = 0.5 * (fs.grad + fs.grad.transpose());
    fs.stress = 2.0 * g.mu * fs.strain;
    fs.stress.diagonal().array() -= fs.pressure;
    fs.divergence = fs.grad.trace();
    return fs;
}

} // namespace gapflow
