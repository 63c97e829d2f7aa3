#pragma once

#include <functional>

namespace epb {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to the
/// given absolute tolerance. Throws accuracy_error if the tolerance cannot
/// be met within the subdivision budget.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double abs_tol,
                                    int max_depth = 60);

} // namespace epb
