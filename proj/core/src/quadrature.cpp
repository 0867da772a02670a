#include "gapflow/quadrature.hpp"

#include "gapflow/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace gapflow {

namespace {

// 7-15 Gauss-Kronrod pair (QUADPACK abscissae/weights)
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct RuleResult {
    double kronrod;
    double err;
};

RuleResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resg = 0.0, resk = 0.0;
    const double fc = f(c);
    resk = wgk[7] * fc;
    resg = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * xgk[j];
        const double fsum = f(c - x) + f(c + x);
        resk += wgk[j] * fsum;
        if (j % 2 == 1) resg += wg[j / 2] * fsum;
    }
    return {resk * h, std::abs((resk - resg) * h)};
}

// double-double accumulator (error-free two-sum), keeps the global sum
// accurate when a huge boundary-layer term meets O(1) remainders
struct DD {
    double hi = 0.0, lo = 0.0;
    void add(double x) {
        double s = hi + x;
        double bb = s - hi;
        double err = (hi - (s - bb)) + (x - bb);
        hi = s;
        lo += err;
    }
    double value() const { return hi + lo; }
};

struct Interval {
    double a, b, integral, err;
    int depth;
};

double sphere_surface(int d) {
    // surface measure of the unit sphere S^{d} in R^{d+1}
    return 2.0 * std::pow(std::numbers::pi, 0.5 * (d + 1)) / std::tgamma(0.5 * (d + 1));
}

} // namespace

double adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                              double b, double rel_tol, double layer_width,
                              int max_depth) {
    std::vector<Interval> ivs;
    // geometric seeding toward a: [a + w 2^-k, a + w 2^-(k-1)] resolves an
    // integrand varying on the layer_width scale
    std::vector<double> cuts{b};
    if (layer_width > 0.0 && layer_width < (b - a)) {
        double w = b - a;
        while (w * 0.5 > layer_width) {
            w *= 0.5;
            cuts.push_back(a + w);
        }
    }
    cuts.push_back(a);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto r = gk15(f, cuts[i], cuts[i + 1]);
        ivs.push_back({cuts[i], cuts[i + 1], r.kronrod, r.err, 0});
    }

    for (int iter = 0; iter < 200000; ++iter) {
        DD total;
        double toterr = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            total.add(ivs[i].integral);
            toterr += ivs[i].err;
            if (ivs[i].err > ivs[worst].err) worst = i;
        }
        const double scale = std::max(std::abs(total.value()), 1e-300);
        if (toterr <= rel_tol * scale) return total.value();
        if (ivs[worst].depth >= max_depth)
            throw QuadratureError("adaptive quadrature: tolerance unmet at max refinement depth");
        Interval iv = ivs[worst];
        const double mid = 0.5 * (iv.a + iv.b);
        auto rl = gk15(f, iv.a, mid);
        auto rr = gk15(f, mid, iv.b);
        ivs[worst] = {iv.a, mid, rl.kronrod, rl.err, iv.depth + 1};
        ivs.push_back({mid, iv.b, rr.kronrod, rr.err, iv.depth + 1});
    }
    throw QuadratureError("adaptive quadrature: interval budget exhausted");
}

double gap_integral_closed(int n, double eps, double kappa, double r0) {
    if (eps <= 0) throw std::domain_error("gap_integral_closed: eps > 0 required");
    if (kappa <= 0 || r0 <= 0)
        throw std::domain_error("gap_integral_closed: kappa, r0 > 0");
    if (n == 2) {
        const double s = std::sqrt(2.0 * kappa * eps);
        return 2.0 / s * std::atan(r0 * std::sqrt(2.0 * kappa / eps));
    }
    if (n == 3)
        return std::numbers::pi / (2.0 * kappa) * std::log1p(2.0 * kappa * r0 * r0 / eps);
    throw std::domain_error("gap_integral_closed: n in {2,3}");
}

double gap_integral_asymptotic(int n, double eps, double kappa, double r0) {
    return gap_prefactor(n, kappa) * rho(n, eps) + k_n(n, kappa, r0);
}

double gap_integral_quadrature(int n, double eps, double kappa, double r0,
                               GapWeight weight, double rel_tol) {
    if (n < 2) throw std::domain_error("gap_integral_quadrature: n >= 2");
    if (kappa <= 0 || r0 <= 0)
        throw std::domain_error("gap_integral_quadrature: kappa, r0 > 0");
    if (eps < 0) throw std::domain_error("gap_integral_quadrature: eps >= 0");
    if (eps == 0 && weight == GapWeight::None)
        throw std::domain_error("gap_integral_quadrature: unweighted integrand not integrable at eps = 0");

    // radial power of the weight; axis-squared averages to |x'|^2/(n-1)
    int rpow = 0;
    double wfac = 1.0;
    if (weight == GapWeight::RadiusSquared) rpow = 2;
    if (weight == GapWeight::AxisSquared) {
        rpow = 2;
        wfac = 1.0 / (n - 1);
    }

    const double surf = sphere_surface(n - 2); // = 2 for n = 2
    auto f = [&](double r) {
        return std::pow(r, n - 2 + rpow) / (eps + 2.0 * kappa * r * r);
    };
    const double layer = eps > 0 ? std::max(std::sqrt(eps / (2.0 * kappa)) * 1e-2, eps / 100.0)
                                 : r0 * 1e-12;
    const double radial = adaptive_gauss_kronrod(f, 0.0, r0, rel_tol, layer);
    return surf * wfac * radial;
}

} // namespace gapflow
