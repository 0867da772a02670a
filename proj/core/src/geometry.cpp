#include "gapflow/geometry.hpp"

#include <cmath>

namespace gapflow {

GapGeometry::GapGeometry(int n_, double eps_, double kappa_, double r0_, double mu_)
    : n(n_), eps(eps_), kappa(kappa_), r0(r0_), mu(mu_) {
    if (n < 2) throw std::domain_error("GapGeometry: n must be >= 2");
    if (eps < 0) throw std::domain_error("GapGeometry: eps must be >= 0");
    if (kappa <= 0) throw std::domain_error("GapGeometry: kappa must be > 0");
    if (r0 <= 0) throw std::domain_error("GapGeometry: r0 must be > 0");
    if (mu <= 0) throw std::domain_error("GapGeometry: mu must be > 0");
    if (eps >= 2.0 * kappa * r0 * r0)
        throw std::domain_error("GapGeometry: gap not narrow (eps >= 2*kappa*r0^2)");
}

RigidMode RigidMode::decode(int alpha, int n) {
    const int m = n * (n + 1) / 2;
    if (alpha < 1 || alpha > m)
        throw std::domain_error("RigidMode: alpha out of range 1..n(n+1)/2");
    RigidMode r;
    r.alpha = alpha;
    r.n = n;
    if (alpha <= n) {
        r.kind = Kind::Translation;
        r.axis = alpha;
        return r;
    }
    r.kind = Kind::Rotation;
    if (alpha <= 2 * n - 1) {
        r.i = alpha - n;
        r.j = n;
        return r;
    }
    // remaining pairs 1 <= i < j < n, lexicographic
    int k = alpha - 2 * n; // 0-based rank among those pairs
    for (int i = 1; i < n; ++i) {
        const int cnt = n - 1 - i; // number of j with i < j < n
        if (k < cnt) {
            r.i = i;
            r.j = i + 1 + k;
            return r;
        }
        k -= cnt;
    }
    throw std::logic_error("RigidMode: decode fell through");
}

int RigidMode::encode(const RigidMode& m) {
    if (m.kind == Kind::Translation) return m.axis;
    if (m.j == m.n) return m.n + m.i;
    int alpha = 2 * m.n;
    for (int i = 1; i < m.i; ++i) alpha += m.n - 1 - i;
    return alpha + (m.j - m.i - 1);
}

double delta(const GapGeometry& g, const Vec& xp) {
    detail::check_dim_prime(g, xp);
    const double r = xp.norm();
    if (r > 2.0 * g.r0)
        throw std::domain_error("delta: |x'| > 2*r0");
    return g.eps + 2.0 * g.kappa * xp.squaredNorm();
}

double frak_g(const GapGeometry& g, const Vec& x) {
    detail::check_dim(g, x);
    const Vec xp = x.head(g.n - 1);
    const double d = delta(g, xp);
    const double xn = x[g.n - 1];
    if (d == 0.0)
        throw std::domain_error("frak_g: singular point (touching origin)");
    if (std::abs(xn) > 0.5 * d)
        throw std::domain_error("frak_g: point outside closure of Omega_{2R0}");
    return xn / d;
}

Vec psi(const RigidMode& m, const Vec& x) {
    if (x.size() != m.n)
        throw std::invalid_argument("psi: point dimension does not match mode");
    Vec v = Vec::Zero(m.n);
    if (m.kind == RigidMode::Kind::Translation) {
        v[m.axis - 1] = 1.0;
    } else {
        // x_j e_i - x_i e_j
        v[m.i - 1] = x[m.j - 1];
        v[m.j - 1] = -x[m.i - 1];
    }
    return v;
}

Mat grad_psi(const RigidMode& m) {
    Mat gm = Mat::Zero(m.n, m.n);
    if (m.kind == RigidMode::Kind::Rotation) {
        gm(m.i - 1, m.j - 1) = 1.0;
        gm(m.j - 1, m.i - 1) = -1.0;
    }
    return gm;
}

bool in_region(const GapGeometry& g, double t, const Vec& x) {
    detail::check_dim(g, x);
    if (t <= 0 || t > 2.0 * g.r0)
        throw std::domain_error("in_region: need 0 < t <= 2*r0");
    const Vec xp = x.head(g.n - 1);
    if (xp.norm() >= t) return false;
    const double d = g.eps + 2.0 * g.kappa * xp.squaredNorm();
    return std::abs(x[g.n - 1]) < 0.5 * d;
}

int wall_side(const GapGeometry& g, const Vec& x, double tol) {
    detail::check_dim(g, x);
    const Vec xp = x.head(g.n - 1);
    if (xp.norm() > 2.0 * g.r0) return 0;
    const double half = 0.5 * (g.eps + 2.0 * g.kappa * xp.squaredNorm());
    const double xn = x[g.n - 1];
    if (std::abs(xn - half) <= tol) return +1;
    if (std::abs(xn + half) <= tol) return -1;
    return 0;
}

} // namespace gapflow
