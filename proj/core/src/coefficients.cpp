#include "gapflow/coefficients.hpp"

#include <stdexcept>

namespace gapflow {

AuxCoefficientsQ AuxCoefficientsQ::closed_form(int n, const Rational& kappa) {
    if (n < 2) throw std::domain_error("coefficients: n must be >= 2");
    if (kappa <= 0) throw std::domain_error("coefficients: kappa must be > 0");
    AuxCoefficientsQ c;
    c.a1 = Rational(6, n - 1);
    c.a2 = Rational(-2);
    c.b1 = Rational(-12, 2 * n - 1);
    c.b2 = Rational(3) / (2 * kappa * (2 * n - 1));
    c.b3 = Rational(-5);
    c.b4 = Rational(4 * (n + 1), 2 * n - 1);
    c.b5 = Rational(-12) * kappa;
    c.b6 = Rational(3) / (kappa * (2 * n - 1));
    return c;
}

AuxCoefficientsQ AuxCoefficientsQ::derive(int n, const Rational& kappa) {
    if (n < 2) throw std::domain_error("coefficients: n must be >= 2");
    if (kappa <= 0) throw std::domain_error("coefficients: kappa must be > 0");
    AuxCoefficientsQ c;

    // a1, a2 from the divergence of the alpha = n correction:
    //   a1(n-1) + 3 a2 = 0,  -a1(n-1)/4 + 1 - a2/4 = 0
    c.a2 = Rational(-2);
    c.a1 = Rational(-3) * c.a2 / (n - 1);

    // b3, b5 from the rotational-mode divergence conditions
    //   4k + (3 b5 - 4k b3)/4 = 0,  5 b5 - 12k b3 = 0
    c.b3 = Rational(-5);
    c.b5 = (Rational(4) * kappa * c.b3 - Rational(16) * kappa) / 3;
    if (Rational(5) * c.b5 != Rational(12) * kappa * c.b3)
        throw std::logic_error("coefficient derivation: b3/b5 system inconsistent");

    // b6 from combining b1 = -4k b6, b2 = b6/2 with b1 = -(6+4k b2)/n:
    //   b6 (4kn - 2k) = 6
    c.b6 = Rational(6) / (kappa * (4 * n - 2));
    c.b2 = c.b6 / 2;
    c.b1 = Rational(-4) * kappa * c.b6;
    c.b4 = Rational(2) + Rational(4) * kappa * c.b2;
    return c;
}

AuxCoefficients AuxCoefficients::from_exact(const AuxCoefficientsQ& q) {
    auto d = [](const Rational& r) {
        return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
    };
    return AuxCoefficients{d(q.a1), d(q.a2), d(q.b1), d(q.b2),
                           d(q.b3), d(q.b4), d(q.b5), d(q.b6)};
}

AuxCoefficients AuxCoefficients::make(int n, double kappa) {
    if (n < 2) throw std::domain_error("coefficients: n must be >= 2");
    if (kappa <= 0) throw std::domain_error("coefficients: kappa must be > 0");
    AuxCoefficients c;
    c.a1 = 6.0 / (n - 1);
    c.a2 = -2.0;
    c.b1 = -12.0 / (2 * n - 1);
    c.b2 = 3.0 / (2.0 * kappa * (2 * n - 1));
    c.b3 = -5.0;
    c.b4 = 4.0 * (n + 1) / (2 * n - 1);
    c.b5 = -12.0 * kappa;
    c.b6 = 3.0 / (kappa * (2 * n - 1));
    return c;
}

std::string check_coefficient_relations(const AuxCoefficientsQ& c, int n,
                                        const Rational& kappa) {
    const Rational k = kappa;
    if (c.a1 != Rational(6, n - 1)) return "a1";
    if (c.a2 != Rational(-2)) return "a2";
    if (c.b1 != -(Rational(6) + 4 * k * c.b2) / n) return "b1 = -(6+4k b2)/n";
    if (c.b4 != Rational(2) + 4 * k * c.b2) return "b4 = 2+4k b2";
    if (c.b5 != Rational(-12) * k) return "b5 = -12k";
    if (c.b3 != Rational(-5)) return "b3 = -5";
    if (Rational(5) * c.b5 != Rational(12) * k * c.b3) return "5 b5 = 12k b3";
    if (c.b1 != Rational(-4) * k * c.b6) return "b1 = -4k b6";
    if (c.b2 != c.b6 / 2) return "b2 = b6/2";
    return {};
}

} // namespace gapflow
