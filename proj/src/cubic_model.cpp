#include "epbound/cubic_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace epb {

namespace {
constexpr double kPi = std::numbers::pi;
}

const char* variant_name(CubicVariant v) {
    return v == CubicVariant::printed ? "printed" : "derived";
}

CubicCoefficients assemble(double alpha, double beta, CubicVariant variant) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("assemble requires alpha in (0, 1)");
    if (!(beta > 0.0))
        throw std::domain_error("assemble requires beta > 0");

    CubicCoefficients out;
    out.beta = beta;
    out.alpha = alpha;
    out.variant = variant;

    const double b2 = beta * beta;

    if (variant == CubicVariant::derived) {
        // Project the wave equation onto xi itself. With N = <xi|xi>,
        // L = <Lap>, L2 = <Lap^2>, I = <1/x>, the polynomial in E is
        //   E^3 (N - L) + E^2 (4 alpha I)
        //   + E (-4N + 8L - 4 L2)
        //   + 4 alpha [(2 beta^2 - 2) I - 8 pi xi(0)^2],
        // where <xi|Lap((1/x) xi)> = beta^2 I - 4 pi xi(0)^2 carries the
        // delta-function contact term at the origin.
        const MatrixElements m = closed_forms(beta);
        const double lead = m.norm - m.lap;
        out.c2 = 4.0 * alpha * m.inv_x / lead;
        out.c1 = (-4.0 * m.norm + 8.0 * m.lap - 4.0 * m.lap2) / lead;
        out.c0 = 4.0 * alpha *
                 ((2.0 * b2 - 2.0) * m.inv_x - 8.0 * kPi * m.at_origin) / lead;
    } else {
        const double denom = 1.0 + b2;
        out.c2 = 4.0 * alpha * beta / denom;
        out.c1 = -4.0 * (1.0 + 2.0 * b2 + 4.0 * b2 * b2) / denom;
        out.c0 = -8.0 * alpha * beta * (1.0 + 3.0 * b2) / denom;
    }
    return out;
}

double ClosedFormState::equation_residual_1(double /*alpha*/) const {
    const double k = 1.0 - beta * beta;
    return E * k * (E * E - 4.0 * k);
}

double ClosedFormState::equation_residual_2(double alpha) const {
    const double k = 1.0 - beta * beta;
    return 2.0 * beta * E * (E * E - 8.0 * k) + 4.0 * alpha * (E * E - 2.0 * k);
}

ClosedFormStates closed_form_states(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("closed_form_states requires alpha in (0, 1)");

    const double root = std::sqrt(1.0 - alpha * alpha);
    // 1 - sqrt(1 - a^2) computed without cancellation
    const double small = alpha * alpha / (1.0 + root);

    ClosedFormStates states;
    states.positronium_1s = {std::sqrt(2.0 * (1.0 + root)),
                             std::sqrt(0.5 * small),
                             ClosedFormClass::positronium_1s};
    states.deep = {-2.0 * alpha, 1.0, ClosedFormClass::deep};
    return states;
}

} // namespace epb
