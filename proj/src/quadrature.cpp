#include "epbound/quadrature.hpp"

#include "epbound/errors.hpp"

#include <array>
#include <cmath>

namespace epb {

namespace {

// 15-point Kronrod nodes/weights on [-1, 1] with the embedded 7-point
// Gauss rule. Standard QUADPACK values.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelResult {
    double kronrod;
    double error;
    double abs_kronrod;  // integral of |f|, roundoff scale for this panel
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    double abs_kronrod = kKronrodWeights[7] * std::abs(fc);

    for (int i = 0; i < 7; ++i) {
        const double fl = f(c - h * kKronrodNodes[i]);
        const double fr = f(c + h * kKronrodNodes[i]);
        kronrod += kKronrodWeights[i] * (fl + fr);
        abs_kronrod += kKronrodWeights[i] * (std::abs(fl) + std::abs(fr));
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * (fl + fr);
    }
    kronrod *= h;
    gauss *= h;
    abs_kronrod *= h;
    return {kronrod, std::abs(kronrod - gauss), abs_kronrod};
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double tol, int depth, int max_depth, QuadratureResult& acc) {
    const auto panel = gk15(f, a, b);
    // Requested tolerance, or the roundoff floor of the 15-point rule on
    // this panel -- |K - G| cannot shrink below machine noise in int |f|.
    const double floor = 5e-15 * panel.abs_kronrod;
    if (panel.error <= std::max(tol, floor) || depth >= max_depth) {
        if (panel.error > std::max(tol, floor))
            throw accuracy_error("adaptive quadrature: subdivision budget exhausted",
                                 acc.value + panel.kronrod, panel.error);
        acc.value += panel.kronrod;
        acc.error_estimate += panel.error;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(f, a, c, tol * 0.5, depth + 1, max_depth, acc);
    adapt(f, c, b, tol * 0.5, depth + 1, max_depth, acc);
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double abs_tol, int max_depth) {
    QuadratureResult acc;
    adapt(f, a, b, abs_tol, 0, max_depth, acc);
    return acc;
}

} // namespace epb
