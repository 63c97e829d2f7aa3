#pragma once

#include "epbound/matrix_elements.hpp"

namespace epb {

/// Which coefficient set the variational reduction uses. The two variants
/// differ only in the quartic part of the linear coefficient:
/// printed carries 4*beta^4, derived carries 5*beta^4. Both ship, and the
/// discrepancy report arbitrates which one reproduces the reported minima.
enum class CubicVariant { printed, derived };

const char* variant_name(CubicVariant v);

/// Monic cubic in the dimensionless total energy E:
///   E^3 + c2 E^2 + c1 E + c0 = 0
/// produced by projecting the wave equation onto exp(-beta x).
struct CubicCoefficients {
    double c3 = 1.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    CubicVariant variant = CubicVariant::derived;

    double eval(double E) const {
        return ((c3 * E + c2) * E + c1) * E + c0;
    }
};

/// Assemble the cubic for given coupling and trial exponent.
///
/// The derived variant is built term by term from the trial-function matrix
/// elements plus the delta-function contact term -32 pi (alpha + beta E) at
/// the origin, then normalized to monic form; it is not a hard-coded
/// formula. The printed variant applies the 4*beta^4 coefficient verbatim.
CubicCoefficients assemble(double alpha, double beta, CubicVariant variant);

enum class ClosedFormClass { positronium_1s, deep };

/// A solution of the two algebraic equations obtained when the
/// delta-function term is dropped.
struct ClosedFormState {
    double E = 0.0;
    double beta = 0.0;
    ClosedFormClass state_class = ClosedFormClass::positronium_1s;

    /// Residuals of the two defining algebraic equations:
    ///   E (1-beta^2) (E^2 - 4 (1-beta^2))
    ///   2 beta E (E^2 - 8 (1-beta^2)) + 4 alpha (E^2 - 2 (1-beta^2))
    double equation_residual_1(double alpha) const;
    double equation_residual_2(double alpha) const;
};

struct ClosedFormStates {
    ClosedFormState positronium_1s;
    ClosedFormState deep;
};

/// Delta-term-free solutions:
///   1s:   E = sqrt(2 (1 + sqrt(1 - alpha^2))),
///         beta = sqrt((1 - sqrt(1 - alpha^2)) / 2)
///   deep: E = -2 alpha, beta = 1
ClosedFormStates closed_form_states(double alpha);

} // namespace epb
