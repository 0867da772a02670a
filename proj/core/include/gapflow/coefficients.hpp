// Exact rational coefficient family a1,a2,b1..b6 of the auxiliary gap
// fields, plus the derivation route that recovers them from the
// incompressibility and pressure-matching conditions.
#ifndef GAPFLOW_COEFFICIENTS_HPP
#define GAPFLOW_COEFFICIENTS_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace gapflow {

using Rational = boost::rational<std::int64_t>;

struct AuxCoefficientsQ {
    Rational a1, a2, b1, b2, b3, b4, b5, b6;

    // closed-form values for dimension n and rational curvature kappa
    static AuxCoefficientsQ closed_form(int n, const Rational& kappa);

    // same family obtained by solving the defining linear conditions
    // (divergence-free correction + O(delta^-2) pressure matching)
    static AuxCoefficientsQ derive(int n, const Rational& kappa);

    bool operator==(const AuxCoefficientsQ&) const = default;
};

// double-precision view used by field evaluation
struct AuxCoefficients {
    double a1, a2, b1, b2, b3, b4, b5, b6;
    static AuxCoefficients make(int n, double kappa);
    static AuxCoefficients from_exact(const AuxCoefficientsQ& q);
};

// Verifies every derivation relation exactly; returns the name of the
// first violated relation, or an empty string when all hold.
std::string check_coefficient_relations(const AuxCoefficientsQ& c, int n,
                                        const Rational& kappa);

} // namespace gapflow

#endif
