#pragma once

namespace epb {

/// Radial matrix elements of the exponential trial function
/// xi(x) = exp(-beta x), all over the full 3-D measure 4*pi*x^2 dx.
///
/// lap2 is defined by the momentum-space integral (see fourier_lap2):
/// the double Laplacian of xi carries a delta-function contact term at the
/// origin, and the momentum-space value 5*pi*beta is the one that already
/// includes it.
struct MatrixElements {
    double beta = 0.0;
    double norm = 0.0;       // <xi|xi>        = pi / beta^3
    double inv_x = 0.0;      // <xi|1/x|xi>    = pi / beta^2
    double lap = 0.0;        // <xi|Lap|xi>    = -pi / beta
    double lap2 = 0.0;       // <xi|Lap^2|xi>  = 5 pi beta
    double at_origin = 1.0;  // xi(0)^2
};

MatrixElements closed_forms(double beta);

enum class Integrand {
    norm,
    inv_x,
    lap,
    // xi * Lap^2 xi with the Laplacian applied twice classically (x != 0),
    // i.e. WITHOUT the delta-function contact term: weight beta^4 - 4 beta^3/x.
    // Integrates to -3 pi beta; the contact term contributes 8 pi beta.
    lap2_realspace,
};

/// Independent oracle: adaptive radial quadrature of
/// 4 pi * Int_0^{60/beta} w(x) exp(-2 beta x) x^2 dx, absolute tol 1e-12
/// (rescaled with the beta^{-3} magnitude of the integrals).
double quadrature_oracle(double beta, Integrand id);

/// Contact-term contribution to <xi|Lap^2|xi>: 8 pi beta * xi(0)^2.
/// quadrature_oracle(lap2_realspace) + this equals the closed form.
double lap2_contact_term(double beta);

/// Momentum-space oracle for <xi|Lap^2|xi>:
/// Int s^4 |xi~(s)|^2 d^3 s / (2 pi)^3 with xi~(s) = 8 pi beta / (beta^2+s^2)^2.
/// Free of contact-term subtleties; equals 5 pi beta.
double fourier_lap2(double beta);

} // namespace epb
