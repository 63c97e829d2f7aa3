#include "epbound/matrix_elements.hpp"

#include "epbound/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace epb {

namespace {
constexpr double kPi = std::numbers::pi;

void require_beta(double beta) {
    if (!(beta > 0.0))
        throw std::domain_error("trial exponent beta must be positive");
}
} // namespace

MatrixElements closed_forms(double beta) {
    require_beta(beta);
    MatrixElements m;
    m.beta = beta;
    m.norm = kPi / (beta * beta * beta);
    m.inv_x = kPi / (beta * beta);
    m.lap = -kPi / beta;
    m.lap2 = 5.0 * kPi * beta;
    m.at_origin = 1.0;
    return m;
}

double quadrature_oracle(double beta, Integrand id) {
    require_beta(beta);

    auto weight = [id, beta](double x) {
        switch (id) {
            case Integrand::norm:  return 1.0;
            case Integrand::inv_x: return 1.0 / x;
            case Integrand::lap:   return beta * beta - 2.0 * beta / x;
            case Integrand::lap2_realspace:
                return beta * beta * beta * (beta - 4.0 / x);
        }
        return 0.0;
    };
    auto integrand = [&](double x) {
        return 4.0 * kPi * weight(x) * std::exp(-2.0 * beta * x) * x * x;
    };

    // Cutoff 60/beta leaves an e^{-120} tail. The integrals are of order
    // pi/beta^3, so the absolute tolerance rescales with that magnitude.
    const double cutoff = 60.0 / beta;
    const double tol = 1e-12 * std::max(1.0, 1.0 / (beta * beta * beta));
    return integrate_adaptive(integrand, 0.0, cutoff, tol).value;
}

double lap2_contact_term(double beta) {
    require_beta(beta);
    return 8.0 * kPi * beta;  // times xi(0)^2 = 1
}

double fourier_lap2(double beta) {
    require_beta(beta);
    // Reduces to 32 beta^2 Int_0^inf s^6 / (beta^2 + s^2)^4 ds; substitute
    // s = beta u / (1 - u) to map onto [0, 1).
    auto integrand = [beta](double u) {
        if (u >= 1.0) return 0.0;
        const double s = beta * u / (1.0 - u);
        const double jac = beta / ((1.0 - u) * (1.0 - u));
        const double d = beta * beta + s * s;
        const double s2 = s * s;
        return 32.0 * beta * beta * s2 * s2 * s2 / (d * d * d * d) * jac;
    };
    const double tol = 1e-12 * std::max(1.0, beta);
    return integrate_adaptive(integrand, 0.0, 1.0, tol).value;
}

} // namespace epb
